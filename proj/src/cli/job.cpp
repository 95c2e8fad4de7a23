#include "rexosc/cli/job.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

#include "rexosc/errors.hpp"

namespace rexosc::cli {
namespace {

using nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    throw DomainError("expected a finite number, got '" + t + "'");
  return v;
}

int parse_int(std::string_view s) {
  const std::string t = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw DomainError("expected an integer, got '" + t + "'");
  return v;
}

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("job is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("job field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "text";
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw DomainError("format must be text, json or csv, got '" + std::string(text) + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw NumericalFailure("cannot format number");
  return std::string(buf, ptr);
}

transform::CouplingValue parse_coupling(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return transform::CouplingValue::real(parse_double(text));
  const auto flavor = transform::parse_flavor(trim(text.substr(0, colon)));
  return {parse_double(text.substr(colon + 1)), flavor};
}

std::string format_coupling(const transform::CouplingValue& c) {
  return std::string(transform::to_string(c.flavor)) + ":" + format_double(c.magnitude);
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_double(s));
  return out;
}

std::vector<int> parse_integers(std::string_view text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s));
  return out;
}

std::vector<model::Eigenstate> parse_states(std::string_view text) {
  std::vector<model::Eigenstate> out;
  for (const auto& s : split(text, ';')) {
    model::Eigenstate st{parse_integers(s)};
    for (int l : st.levels)
      if (l < 0) throw DomainError("levels must be non-negative (0 = ground, n+1 = excited n)");
    out.push_back(std::move(st));
  }
  return out;
}

void JobConfig::validate() const {
  spec.validate();
  if (config.codimensions.size() != spec.dimension)
    throw ShapeError("expected " + std::to_string(spec.dimension) + " co-dimensions, got " +
                     std::to_string(config.codimensions.size()));
  const auto rules = model::admissible_codimensions(spec);
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const int m = config.codimensions[i];
    if (m < 0) throw DomainError("co-dimensions must be non-negative");
    if (rules[i] == model::CodimensionRule::even_only && m % 2 != 0)
      throw DomainError("co-dimension " + std::to_string(m) + " on tilde axis " + std::to_string(i + 1) +
                        " must be even: odd values are regular only on an axis with an imaginary linear shift");
  }
  for (const auto& s : states)
    if (s.levels.size() != spec.dimension)
      throw ShapeError("state with " + std::to_string(s.levels.size()) + " levels for a " +
                       std::to_string(spec.dimension) + "D spec");
  if (grid.spacing && !(*grid.spacing > 0.0)) throw DomainError("grid spacing must be positive");
  if (grid.box) {
    if (grid.box->size() != spec.dimension) throw ShapeError("grid box needs one interval per axis");
    for (const auto& iv : *grid.box)
      if (!(iv[0] < iv[1])) throw DomainError("grid box intervals need lower < upper");
  }
}

std::string to_json(const JobConfig& job) {
  ordered_json spec{{"dimension", job.spec.dimension},
                    {"frequencies", job.spec.frequencies},
                    {"perturbation", std::string(model::to_string(job.spec.perturbation))},
                    {"lambda0", format_coupling(job.spec.lambda0)},
                    {"lambda", format_coupling(job.spec.lambda)},
                    {"lambda1", format_coupling(job.spec.lambda1)},
                    {"lambda2", format_coupling(job.spec.lambda2)},
                    {"lambda3", format_coupling(job.spec.lambda3)}};
  ordered_json states = ordered_json::array();
  for (const auto& s : job.states) states.push_back(s.levels);
  ordered_json grid{{"spacing", job.grid.spacing ? ordered_json(*job.grid.spacing) : ordered_json(nullptr)},
                    {"box", nullptr},
                    {"exclude_poles", job.grid.exclude_poles}};
  if (job.grid.box) {
    ordered_json box = ordered_json::array();
    for (const auto& iv : *job.grid.box) box.push_back({iv[0], iv[1]});
    grid["box"] = box;
  }
  ordered_json j{{"spec", spec},
                 {"config", {{"codimensions", job.config.codimensions}}},
                 {"states", states},
                 {"grid", grid},
                 {"format", std::string(to_string(job.format))}};
  return j.dump(2) + "\n";
}

JobConfig job_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("job file is not valid JSON: ") + e.what());
  }
  JobConfig job;
  try {
  const auto& s = j.at("spec");
  job.spec.dimension = field<std::size_t>(s, "dimension");
  job.spec.frequencies = field<std::vector<double>>(s, "frequencies");
  job.spec.perturbation = model::parse_perturbation(field<std::string>(s, "perturbation"));
  for (auto [key, target] : {std::pair{"lambda0", &job.spec.lambda0}, std::pair{"lambda", &job.spec.lambda},
                             std::pair{"lambda1", &job.spec.lambda1}, std::pair{"lambda2", &job.spec.lambda2},
                             std::pair{"lambda3", &job.spec.lambda3}})
    if (s.contains(key)) *target = parse_coupling(field<std::string>(s, key));
  job.config.codimensions = field<std::vector<int>>(j.at("config"), "codimensions");
  if (j.contains("states"))
    for (const auto& st : j.at("states")) job.states.push_back({st.get<std::vector<int>>()});
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.contains("spacing") && !g.at("spacing").is_null()) job.grid.spacing = g.at("spacing").get<double>();
    if (g.contains("box") && !g.at("box").is_null()) {
      verify::Box box;
      for (const auto& iv : g.at("box")) box.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
      job.grid.box = box;
    }
    if (g.contains("exclude_poles")) job.grid.exclude_poles = g.at("exclude_poles").get<bool>();
  }
  if (j.contains("format")) job.format = parse_format(field<std::string>(j, "format"));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed job: ") + e.what());
  }
  job.validate();
  return job;
}

}  // namespace rexosc::cli
