#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rexosc/cli/job.hpp"
#include "rexosc/cli/run.hpp"
#include "rexosc/errors.hpp"

using namespace rexosc;
using namespace rexosc::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rexosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(REXOSC_GOLDEN_DIR) + "/" + name);
  REQUIRE(f);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rexosc_cli_" + name);
}

}  // namespace

TEST_CASE("coupling and list parsing") {
  CHECK(parse_coupling("real:1.5").flavor == transform::Flavor::real);
  CHECK(parse_coupling("imaginary:-2").magnitude == doctest::Approx(-2.0));
  CHECK(parse_coupling("0.25").flavor == transform::Flavor::real);
  CHECK_THROWS_AS(parse_coupling("complex:1"), DomainError);
  CHECK_THROWS_AS(parse_coupling("real:abc"), DomainError);
  const auto states = parse_states("0,0;1,2");
  REQUIRE(states.size() == 2);
  CHECK(states[1].levels == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_states("0,-1"), DomainError);
  CHECK(parse_integers("0,2,4") == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("job serialization is byte-stable") {
  JobConfig job;
  job.spec = model::OscillatorSpec::quadratic_2d(1.0, 3.0, transform::CouplingValue::imaginary(std::sqrt(7.0)));
  job.config.codimensions = {2, 2};
  job.states = {model::Eigenstate::ground(2), model::Eigenstate::excited({1, 3})};
  job.grid.spacing = 0.05;
  job.grid.box = verify::Box{{-4.0, 4.0}, {-3.5, 3.5}};
  job.grid.exclude_poles = true;
  job.format = Format::json;
  const std::string first = to_json(job);
  const JobConfig back = job_from_json(first);
  CHECK(to_json(back) == first);
  CHECK(back.spec.lambda.magnitude == job.spec.lambda.magnitude);  // bitwise, shortest round-trip printing
  CHECK(back.states[1].levels == job.states[1].levels);
  CHECK(*back.grid.spacing == 0.05);

  // Odd irrational-looking doubles survive too.
  job.spec = model::OscillatorSpec::linear_quadratic_3d(0.1 + 0.2, std::sqrt(2.0), M_PI, transform::CouplingValue::imaginary(1.0 / 3.0),
                                                        transform::CouplingValue::real(0.7));
  job.config.codimensions = {0, 2, 3};
  job.states = {model::Eigenstate::ground(3)};
  job.grid = {};
  const std::string second = to_json(job);
  CHECK(to_json(job_from_json(second)) == second);
}

TEST_CASE("job parsing rejects invalid documents") {
  CHECK_THROWS_AS(job_from_json("{"), DomainError);
  CHECK_THROWS_AS(job_from_json(R"({"spec": 3})"), DomainError);
  JobConfig job;
  job.spec = model::OscillatorSpec::linear_1d(2.0, transform::CouplingValue::real(1.0));
  job.config.codimensions = {3};
  CHECK_THROWS_AS(job.validate(), DomainError);  // odd m with a real shift
  job.config.codimensions = {2};
  job.states = {model::Eigenstate::ground(2)};
  CHECK_THROWS_AS(job.validate(), ShapeError);
}

TEST_CASE("transform example: k and 1:3 ratio") {
  const auto r = invoke({"transform", "--dim", "2", "--omega", "1,2", "--coupling", "real:1.3229", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  // 1.3229 is sqrt(7)/2 rounded, so k matches -3/4 only to the rounding.
  CHECK(j["k"]["re"].get<double>() == doctest::Approx(-0.75).epsilon(1e-4));
  CHECK(j["ratio"] == "1:3");
  CHECK(j["reality"]["real"] == true);

  const auto text = invoke({"transform", "--dim", "2", "--omega", "1,2", "--coupling", "real:1.3229"});
  CHECK(text.code == 0);
  CHECK(text.out.find("ratio: 1:3") != std::string::npos);
}

TEST_CASE("degeneracy example: gamma = sqrt 7") {
  const auto r =
      invoke({"degeneracy", "--dim", "2", "--omega", "1,3", "--flavor", "imaginary", "--ratio", "1/2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["square"].get<double>() == doctest::Approx(-7.0).epsilon(1e-12));
  const auto value = parse_coupling(j["coupling"].get<std::string>());
  CHECK(value.flavor == transform::Flavor::imaginary);
  CHECK(std::abs(value.magnitude) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
  CHECK(j["tilde_frequencies"][1]["re"].get<double>() ==
        doctest::Approx(2.0 * j["tilde_frequencies"][0]["re"].get<double>()).epsilon(1e-12));

  const auto q1 = invoke({"degeneracy", "--dim", "3", "--case", "q1", "--omega", std::to_string(std::sqrt(2.0)) + ",1",
                          "--ratio", "2", "--format", "json"});
  REQUIRE(q1.code == 0);
  CHECK(json::parse(q1.out)["square"].get<double>() == doctest::Approx(14.0 / 25.0).epsilon(1e-5));
}

TEST_CASE("verify example: no poles, PT +1, small residual") {
  const auto r = invoke({"verify", "--dim", "1", "--omega", "2", "--linear", "imaginary:1", "--m", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["poles"].empty());
  CHECK(j["max_residual"].get<double>() <= 1e-6);
  CHECK(j["pt_eigenvalue"]["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(j["states"][0]["pt_predicted"] == 1);
  CHECK(j["fitted_offset"]["re"].get<double>() == doctest::Approx(j["predicted_offset"]["re"].get<double>()).epsilon(1e-5));
}

TEST_CASE("exit codes follow the error classes") {
  SUBCASE("parse and validation failures exit 1") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"transform", "--dim", "4"}).code == 1);
    CHECK(invoke({"transform", "--dim", "2", "--omega", "1"}).code == 1);
    CHECK(invoke({"verify", "--dim", "1", "--omega", "2", "--linear", "real:1", "--m", "3"}).code == 1);
    CHECK(invoke({"table", "--dim", "2", "--omega", "1,2"}).code == 1);
  }
  SUBCASE("help exits 0") { CHECK(invoke({"--help"}).code == 0); }
  SUBCASE("broken reality condition names the condition") {
    const auto r = invoke({"verify", "--dim", "2", "--omega", "1,3", "--coupling", "imaginary:5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("not real") != std::string::npos);
    CHECK(r.err.find("omega") != std::string::npos);
  }
  SUBCASE("real poles exit 3 unless excluded") {
    const auto r = invoke({"verify", "--dim", "2", "--omega", "1,3", "--coupling", "imaginary:1", "--m", "2"});
    CHECK(r.code == 3);
    CHECK(r.out.find("poles: 4") != std::string::npos);
  }
  SUBCASE("degenerate map exits 3") {
    // |gamma| = |omega1^2 - omega2^2| / 2 zeroes the discriminant.
    const auto r = invoke({"transform", "--dim", "2", "--omega", "1,3", "--coupling", "imaginary:4"});
    CHECK(r.code == 3);
  }
  SUBCASE("unwritable output exits 1") {
    const auto r = invoke({"transform", "--out", "/nonexistent_dir/x.txt"});
    CHECK(r.code == 1);
  }
}

TEST_CASE("golden CSV files") {
  CHECK(invoke({"table", "--omega", "2", "--linear", "imaginary:1"}).out == golden("table_imaginary_linear.csv"));
  CHECK(invoke({"table", "--omega", "2", "--m", "0,2", "--x", "-1,-0.5,0,0.5,1"}).out == golden("table_hermitian.csv"));
  CHECK(invoke({"spectrum", "--dim", "2", "--omega", "1,3", "--coupling", "imaginary:2.6457513110645907", "--ratio",
                "1/2", "--cutoff", "12", "--m", "0,2", "--format", "csv"})
            .out == golden("spectrum_imaginary_2d.csv"));
}

TEST_CASE("plotdata schema and symmetry") {
  const auto one = invoke({"plotdata", "--omega", "2", "--linear", "imaginary:1", "--points", "41"});
  REQUIRE(one.code == 0);
  CHECK(first_line(one.out) == "m,x,re_V,im_V,re_psi,im_psi");
  CHECK(line_count(one.out) == 1 + 6 * 41);

  const auto two = invoke({"plotdata", "--dim", "2", "--omega", "1,2", "--coupling", "real:1.3228756555322954", "--points",
                           "11", "--format", "json"});
  REQUIRE(two.code == 0);
  const auto rows = json::parse(two.out);
  CHECK(rows.size() == 121);
  for (const auto& row : rows) CHECK(std::abs(row["V"]["im"].get<double>()) <= 1e-12);  // Hermitian: real V

  const auto csv = invoke({"plotdata", "--dim", "2", "--omega", "1,2", "--coupling", "real:1.3228756555322954", "--points", "5"});
  CHECK(first_line(csv.out) == "x,y,re_V,im_V,re_psi,im_psi");
  CHECK(line_count(csv.out) == 1 + 25);
}

TEST_CASE("save-job, job and out files") {
  const auto job_path = scratch("job.json"), out_path = scratch("out.csv");
  const auto a = invoke({"spectrum", "--dim", "2", "--omega", "1,3", "--coupling", "imaginary:2.6457513110645907", "--m",
                         "2", "--cutoff", "12", "--format", "csv", "--save-job", job_path.string()});
  REQUIRE(a.code == 0);
  const auto b = invoke({"spectrum", "--job", job_path.string(), "--cutoff", "12", "--out", out_path.string()});
  REQUIRE(b.code == 0);
  CHECK(b.out.empty());
  std::ifstream f(out_path);
  std::ostringstream os;
  os << f.rdbuf();
  CHECK(os.str() == a.out);
  std::filesystem::remove(job_path);
  std::filesystem::remove(out_path);
}
