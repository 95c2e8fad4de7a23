#include "rexosc/cli/run.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rexosc/cli/job.hpp"
#include "rexosc/errors.hpp"
#include "rexosc/model/spectrum.hpp"
#include "rexosc/transform/conditions.hpp"
#include "rexosc/verify/report.hpp"

namespace rexosc::cli {
namespace {

using nlohmann::ordered_json;
using model::cplx;

struct SpecFlags {
  std::size_t dim = 1;
  std::string omega = "1";
  std::string coupling;
  std::string linear;
  std::string lambda1, lambda2, lambda3;
  std::string which = "auto";
};

struct Common {
  SpecFlags spec;
  std::string m;
  std::string states;
  std::string job;
  std::string out;
  std::string format;
  std::string save_job;
};

void add_spec_options(CLI::App* app, SpecFlags& f) {
  app->add_option("--dim", f.dim, "Dimension (1-3)")->check(CLI::Range(1, 3));
  app->add_option("--omega", f.omega, "Frequencies, comma separated (q1/q2: w,w3)");
  app->add_option("--coupling", f.coupling, "Quadratic coupling, flavor:value (2D xy, 3D lq xy, q2 yz/zx)");
  app->add_option("--linear", f.linear, "Linear shift, flavor:value (1D x, 3D lq z)");
  app->add_option("--lambda1", f.lambda1, "q2 xy coupling (real)");
  app->add_option("--lambda2", f.lambda2, "q1 yz coupling, flavor:value");
  app->add_option("--lambda3", f.lambda3, "q1 zx coupling, flavor:value");
  app->add_option("--case", f.which, "3D case: auto, lq, q1, q2");
}

model::OscillatorSpec spec_from_flags(const SpecFlags& f) {
  const auto w = parse_numbers(f.omega);
  const auto c = [](const std::string& s) { return s.empty() ? transform::CouplingValue{} : parse_coupling(s); };
  const auto need = [&](std::size_t n) {
    if (w.size() != n)
      throw ShapeError("--omega needs " + std::to_string(n) + " value(s) here, got " + std::to_string(w.size()));
  };
  switch (f.dim) {
    case 1:
      need(1);
      return f.linear.empty() ? model::OscillatorSpec::oscillator(w) : model::OscillatorSpec::linear_1d(w[0], c(f.linear));
    case 2:
      need(2);
      return f.coupling.empty() ? model::OscillatorSpec::oscillator(w)
                                : model::OscillatorSpec::quadratic_2d(w[0], w[1], c(f.coupling));
    default: break;
  }
  std::string which = f.which;
  if (which == "auto") {
    if (!f.lambda2.empty() || !f.lambda3.empty()) which = "q1";
    else if (!f.lambda1.empty()) which = "q2";
    else if (!f.coupling.empty() || !f.linear.empty()) which = "lq";
    else which = "none";
  }
  if (which == "none") {
    need(3);
    return model::OscillatorSpec::oscillator(w);
  }
  if (which == "lq") {
    need(3);
    return model::OscillatorSpec::linear_quadratic_3d(w[0], w[1], w[2], c(f.linear), c(f.coupling));
  }
  if (which != "q1" && which != "q2") throw DomainError("--case must be auto, lq, q1 or q2");
  // Shared in-plane frequency: accept w,w3 or w,w,w3.
  double wp = 0.0, w3 = 0.0;
  if (w.size() == 2) {
    wp = w[0], w3 = w[1];
  } else if (w.size() == 3 && w[0] == w[1]) {
    wp = w[0], w3 = w[2];
  } else {
    throw ShapeError("q1 and q2 need --omega w,w3 (equal x and y frequencies)");
  }
  if (which == "q1") return model::OscillatorSpec::q1(wp, w3, c(f.lambda2), c(f.lambda3));
  return model::OscillatorSpec::q2(wp, w3, c(f.lambda1), c(f.coupling));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

JobConfig job_from(const Common& c, std::optional<std::vector<int>> default_m = std::nullopt) {
  JobConfig job;
  if (!c.job.empty()) {
    job = job_from_json(read_file(c.job));
  } else {
    job.spec = spec_from_flags(c.spec);
    if (!c.m.empty()) {
      job.config.codimensions = parse_integers(c.m);
      if (job.config.codimensions.size() == 1 && job.spec.dimension > 1)
        job.config.codimensions.assign(job.spec.dimension, job.config.codimensions[0]);
    } else {
      job.config.codimensions = default_m.value_or(std::vector<int>(job.spec.dimension, 0));
    }
    if (!c.states.empty()) job.states = parse_states(c.states);
  }
  if (!c.format.empty()) job.format = parse_format(c.format);
  return job;
}

std::string num(double v) {
  if (v == 0.0) return "0";  // no "-0" in tables
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string num(cplx z) {
  if (z.imag() == 0.0 || std::abs(z.imag()) <= 1e-15 * std::abs(z)) return num(z.real());
  if (z.real() == 0.0 || std::abs(z.real()) <= 1e-15 * std::abs(z)) return num(z.imag()) + "i";
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

ordered_json cj(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string csv_num(double v) { return std::isfinite(v) ? num(v) : "nan"; }

struct Sink {
  std::ostream& out;
  std::string path;
  std::ostringstream buffer;
  void flush() {
    if (path.empty()) out << buffer.str();
    else write_file(path, buffer.str());
  }
};

// ---- transform --------------------------------------------------------------------------------

void cmd_transform(const Common& c, Sink& sink) {
  const auto spec = spec_from_flags(c.spec);
  const Format fmt = c.format.empty() ? Format::text : parse_format(c.format);
  const auto verdict = model::spectral_reality(spec);
  const auto sys = model::decouple(spec);
  const std::size_t d = sys.dimension();
  std::optional<model::Rational> ratio;
  if (d >= 2 && sys.has_real_frequencies())
    ratio = model::rational_approximation(sys.tilde_frequencies[0].real() / sys.tilde_frequencies[1].real(), 100, 1e-4);

  if (fmt == Format::json) {
    ordered_json j;
    j["perturbation"] = std::string(model::to_string(spec.perturbation));
    j["frequencies"] = spec.frequencies;
    if (sys.rotation) {
      j["k"] = cj(sys.rotation->k);
      j["a"] = cj(sys.rotation->a);
      j["b"] = cj(sys.rotation->b);
      j["discriminant"] = cj(sys.rotation->discriminant);
    }
    ordered_json wt = ordered_json::array();
    for (const auto& w : sys.tilde_frequencies) wt.push_back(cj(w));
    j["tilde_frequencies"] = wt;
    if (ratio) j["ratio"] = std::to_string(ratio->num) + ":" + std::to_string(ratio->den);
    j["potential_constant"] = cj(sys.potential_constant);
    ordered_json lin = ordered_json::array(), shift = ordered_json::array();
    for (std::size_t r = 0; r < d; ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < d; ++k) row.push_back(cj(sys.map.linear(r, k)));
      lin.push_back(row);
      shift.push_back(cj(sys.map.shift(r)));
    }
    j["map"] = {{"linear", lin}, {"shift", shift}};
    j["reality"] = {{"real", verdict.real}, {"condition", verdict.condition}, {"failed", verdict.failed}};
    sink.buffer << j.dump(2) << "\n";
    return;
  }
  auto& o = sink.buffer;
  o << "perturbation: " << model::to_string(spec.perturbation) << "\n";
  if (sys.rotation) {
    o << "k: " << num(sys.rotation->k) << "\n";
    o << "a: " << num(sys.rotation->a) << "\n";
    o << "b: " << num(sys.rotation->b) << "\n";
  }
  o << "tilde frequencies:";
  for (const auto& w : sys.tilde_frequencies) o << " " << num(w);
  o << "\n";
  if (ratio) o << "ratio: " << ratio->num << ":" << ratio->den << "\n";
  o << "potential constant: " << num(sys.potential_constant) << "\n";
  o << "map (tilde = L old + s):\n";
  for (std::size_t r = 0; r < d; ++r) {
    o << "  [";
    for (std::size_t k = 0; k < d; ++k) o << (k ? ", " : "") << num(sys.map.linear(r, k));
    o << "] + " << num(sys.map.shift(r)) << "\n";
  }
  o << "reality: " << (verdict.real ? "real" : "complex") << " (" << verdict.condition << ")\n";
  if (!verdict.real) o << "violated: " << verdict.failed << "\n";
}

// ---- degeneracy -------------------------------------------------------------------------------

void cmd_degeneracy(const Common& c, const std::string& ratio_text, const std::string& flavor_text, Sink& sink) {
  const Format fmt = c.format.empty() ? Format::text : parse_format(c.format);
  double r = 0.0;
  if (const auto slash = ratio_text.find('/'); slash != std::string::npos) {
    const auto pq = parse_numbers(ratio_text.substr(0, slash) + "," + ratio_text.substr(slash + 1));
    if (pq[1] == 0.0) throw DomainError("ratio denominator is zero");
    r = pq[0] / pq[1];
  } else {
    r = parse_numbers(ratio_text).at(0);
  }
  std::optional<transform::Flavor> flavor;
  if (!flavor_text.empty()) flavor = transform::parse_flavor(flavor_text);
  const auto w = parse_numbers(c.spec.omega);

  transform::CouplingValue value;
  std::string name;
  model::OscillatorSpec spec;
  if (c.spec.dim == 2) {
    if (w.size() != 2) throw ShapeError("--omega needs two values in 2D");
    value = transform::degeneracy_coupling_2d(r, w[0], w[1], flavor);
    name = "lambda";
    spec = model::OscillatorSpec::quadratic_2d(w[0], w[1], value);
  } else if (c.spec.dim == 3) {
    if (w.size() != 2) throw ShapeError("--omega needs w,w3 for the 3D degeneracy conditions");
    transform::Params3d p;
    p.omega = {w[0], w[0], w[1]};
    if (c.spec.which == "q2" || !c.spec.lambda1.empty()) {
      p.lambda1 = c.spec.lambda1.empty() ? transform::CouplingValue{} : parse_coupling(c.spec.lambda1);
      value = transform::degeneracy_coupling_3d(transform::Case3d::q2, r, p, flavor);
      name = "lambda";
      spec = model::OscillatorSpec::q2(w[0], w[1], p.lambda1, value);
    } else {
      value = transform::degeneracy_coupling_3d(transform::Case3d::q1, r, p, flavor);
      name = "sqrt(lambda2^2 + lambda3^2)";
      spec = model::OscillatorSpec::q1(w[0], w[1], value, transform::CouplingValue{});
    }
  } else {
    throw DomainError("degeneracy conditions exist in 2D and 3D");
  }
  const auto sys = model::decouple(spec);
  const auto verdict = model::spectral_reality(spec);
  if (fmt == Format::json) {
    ordered_json j{{"ratio", r},
                   {"coupling", format_coupling(value)},
                   {"coupling_name", name},
                   {"square", value.square()}};
    ordered_json wt = ordered_json::array();
    for (const auto& x : sys.tilde_frequencies) wt.push_back(cj(x));
    j["tilde_frequencies"] = wt;
    j["real_spectrum"] = verdict.real;
    sink.buffer << j.dump(2) << "\n";
    return;
  }
  sink.buffer << name << ": " << format_coupling(value) << "\n";
  sink.buffer << "square: " << num(value.square()) << "\n";
  sink.buffer << "tilde frequencies:";
  for (const auto& x : sys.tilde_frequencies) sink.buffer << " " << num(x);
  sink.buffer << "\nreality: " << (verdict.real ? "real" : "complex") << "\n";
}

// ---- spectrum ---------------------------------------------------------------------------------

void cmd_spectrum(const Common& c, std::optional<double> cutoff, const std::string& ratio_text, Sink& sink) {
  JobConfig job = job_from(c);
  job.validate();
  if (!c.save_job.empty()) write_file(c.save_job, to_json(job));
  const auto sys = model::decouple(job.spec);
  double wmax = 0.0;
  for (const auto& w : sys.tilde_frequencies) wmax = std::max(wmax, w.real());
  std::optional<std::vector<model::Rational>> ratios;
  if (!ratio_text.empty()) {
    if (sys.dimension() != 2) throw DomainError("--ratio p/q applies to 2D specs");
    const auto parts = parse_integers(ratio_text.substr(0, ratio_text.find('/')) + "," +
                                      (ratio_text.find('/') == std::string::npos ? "1" : ratio_text.substr(ratio_text.find('/') + 1)));
    // p:q is w~1 : w~2, so w~2 / w~1 = q / p.
    ratios = std::vector<model::Rational>{{1, 1}, {parts[1], parts[0]}};
  }
  const auto table = model::spectrum(job.spec, job.config, cutoff.value_or(10.0 * wmax), ratios);
  const auto states_text = [](const model::SpectrumEntry& e) {
    std::string s;
    for (std::size_t i = 0; i < e.states.size(); ++i) {
      if (i) s += ";";
      for (std::size_t k = 0; k < e.states[i].levels.size(); ++k)
        s += (k ? " " : "") + std::to_string(e.states[i].levels[k]);
    }
    return s;
  };
  switch (job.format) {
    case Format::json: {
      ordered_json entries = ordered_json::array();
      for (const auto& e : table.entries) {
        ordered_json st = ordered_json::array();
        for (const auto& s : e.states) st.push_back(s.levels);
        entries.push_back(
            {{"energy", cj(e.energy)}, {"multiplicity", e.multiplicity}, {"complex", e.complex}, {"states", st}});
      }
      sink.buffer << ordered_json{{"exact_grouping", table.exact_grouping}, {"entries", entries}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      sink.buffer << "level,re_E,im_E,multiplicity,states\n";
      for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        sink.buffer << i << "," << csv_num(e.energy.real()) << "," << csv_num(e.energy.imag()) << "," << e.multiplicity
                    << "," << states_text(e) << "\n";
      }
      break;
    case Format::text:
      sink.buffer << "grouping: " << (table.exact_grouping ? "exact" : "tolerance 1e-9") << "\n";
      for (const auto& e : table.entries)
        sink.buffer << "E = " << num(e.energy) << "  x" << e.multiplicity << (e.complex ? "  complex" : "") << "  ["
                    << states_text(e) << "]\n";
      break;
  }
}

// ---- verify -----------------------------------------------------------------------------------

int cmd_verify(const Common& c, std::optional<double> spacing, bool exclude, Sink& sink) {
  JobConfig job = job_from(c);
  if (spacing) job.grid.spacing = spacing;
  if (exclude) job.grid.exclude_poles = true;
  if (job.states.empty()) {
    const std::size_t d = job.spec.dimension;
    job.states = {model::Eigenstate::ground(d), model::Eigenstate::excited(std::vector<int>(d, 0)),
                  model::Eigenstate::excited(std::vector<int>(d, 1))};
  }
  job.validate();
  const auto verdict = model::spectral_reality(job.spec);
  if (!verdict.real) throw DomainError("spectrum is not real: " + verdict.failed);
  if (!c.save_job.empty()) write_file(c.save_job, to_json(job));

  const model::ExtendedSystem ext(job.spec, job.config);
  verify::VerifyOptions opt;
  opt.spacing = job.grid.spacing;
  opt.box = job.grid.box;
  opt.scan.exclude_poles = job.grid.exclude_poles;
  const auto rep = verify::verify_states(ext, job.states, opt);

  if (job.format == Format::json) {
    ordered_json poles = ordered_json::array();
    for (const auto& p : rep.poles) poles.push_back(p);
    ordered_json states = ordered_json::array();
    for (const auto& s : rep.states) {
      ordered_json e{{"levels", s.state.levels},
                     {"max_residual", s.max_residual},
                     {"fitted_offset", cj(s.fitted_offset)},
                     {"relative_energy", cj(s.relative_energy)},
                     {"rayleigh", s.rayleigh ? cj(*s.rayleigh) : ordered_json(nullptr)},
                     {"pt_eigenvalue", s.pt_eigenvalue ? cj(*s.pt_eigenvalue) : ordered_json("indeterminate")},
                     {"pt_predicted", s.pt_predicted ? ordered_json(*s.pt_predicted) : ordered_json(nullptr)},
                     {"pt_residual", s.pt_residual}};
      states.push_back(e);
    }
    ordered_json gram = ordered_json::array();
    for (const auto& row : rep.gram) {
      ordered_json r = ordered_json::array();
      for (const auto& v : row) r.push_back(cj(v));
      gram.push_back(r);
    }
    ordered_json j{{"max_residual", rep.max_residual},
                   {"fitted_offset", cj(rep.fitted_offset)},
                   {"predicted_offset", cj(rep.predicted_offset)},
                   {"offset_spread", rep.offset_spread},
                   {"poles", poles},
                   {"parity", rep.parity},
                   {"pt_eigenvalue", rep.pt_eigenvalue ? cj(*rep.pt_eigenvalue) : ordered_json("indeterminate")},
                   {"gram", gram},
                   {"states", states},
                   {"notes", rep.notes}};
    sink.buffer << j.dump(2) << "\n";
  } else {
    auto& o = sink.buffer;
    o << "poles: " << (rep.poles.empty() ? "none" : std::to_string(rep.poles.size())) << "\n";
    for (const auto& p : rep.poles) {
      o << "  at (";
      for (std::size_t i = 0; i < p.size(); ++i) o << (i ? ", " : "") << num(p[i]);
      o << ")\n";
    }
    if (!rep.states.empty()) {
      o << "max residual: " << num(rep.max_residual) << "\n";
      o << "fitted offset: " << num(rep.fitted_offset) << " (closed form " << num(rep.predicted_offset)
        << ", spread " << num(rep.offset_spread) << ")\n";
      o << "parity: " << rep.parity << "\n";
      for (const auto& s : rep.states) {
        o << "state [";
        for (std::size_t i = 0; i < s.state.levels.size(); ++i) o << (i ? " " : "") << s.state.levels[i];
        o << "]: residual " << num(s.max_residual) << ", E_rel " << num(s.relative_energy);
        if (s.rayleigh) o << ", Rayleigh " << num(*s.rayleigh);
        o << ", PT " << (s.pt_eigenvalue ? num(*s.pt_eigenvalue) : std::string("indeterminate"));
        if (s.pt_predicted) o << " (predicted " << *s.pt_predicted << ")";
        o << "\n";
      }
      if (!rep.gram.empty()) o << "gram max off-diagonal: " << num(verify::max_off_diagonal(rep.gram)) << "\n";
    }
    if (!rep.notes.empty()) o << "notes: " << rep.notes << "\n";
  }
  return !rep.poles.empty() && !job.grid.exclude_poles ? static_cast<int>(ErrorClass::singular) : 0;
}

// ---- table / plotdata -------------------------------------------------------------------------

struct Sample {
  cplx v{NAN, NAN};
  cplx psi{NAN, NAN};
};

Sample sample_at(const model::ExtendedSystem& ext, const model::Eigenstate& st, const std::vector<cplx>& p) {
  Sample s;
  try {
    s.v = ext.potential(p);
    s.psi = ext.eigenfunction(st, p);
  } catch (const SingularityError&) {
    s = Sample{};
  }
  return s;
}

void emit_rows_1d(const model::OscillatorSpec& spec, const std::vector<int>& ms, const std::vector<double>& xs,
                  int level, Format fmt, Sink& sink) {
  ordered_json rows = ordered_json::array();
  if (fmt != Format::json) sink.buffer << "m,x,re_V,im_V,re_psi,im_psi\n";
  for (int m : ms) {
    const model::ExtendedSystem ext(spec, model::REConfig{{m}});
    for (double x : xs) {
      const auto s = sample_at(ext, model::Eigenstate{{level}}, {cplx(x)});
      if (fmt == Format::json) {
        rows.push_back({{"m", m}, {"x", x}, {"V", cj(s.v)}, {"psi", cj(s.psi)}});
      } else {
        sink.buffer << m << "," << csv_num(x) << "," << csv_num(s.v.real()) << "," << csv_num(s.v.imag()) << ","
                    << csv_num(s.psi.real()) << "," << csv_num(s.psi.imag()) << "\n";
      }
    }
  }
  if (fmt == Format::json) sink.buffer << rows.dump(2) << "\n";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("need at least two sample points");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

std::array<double, 2> parse_range(const std::string& text) {
  const auto r = parse_numbers(text);
  if (r.size() != 2 || !(r[0] < r[1])) throw DomainError("--range needs lo,hi with lo < hi");
  return {r[0], r[1]};
}

void cmd_table(const Common& c, const std::string& xs_text, int level, Sink& sink) {
  if (c.spec.dim != 1) throw DomainError("table reproduces the one-dimensional rows; use plotdata for 2D");
  const auto spec = spec_from_flags(c.spec);
  const auto ms = c.m.empty() ? std::vector<int>{0, 1, 2, 3} : parse_integers(c.m);
  const auto xs = xs_text.empty() ? linspace(-2.0, 2.0, 9) : parse_numbers(xs_text);
  emit_rows_1d(spec, ms, xs, level, c.format.empty() ? Format::csv : parse_format(c.format), sink);
}

void cmd_plotdata(const Common& c, const std::string& range_text, std::size_t points, Sink& sink) {
  const auto spec = spec_from_flags(c.spec);
  const Format fmt = c.format.empty() ? Format::csv : parse_format(c.format);
  if (spec.dimension == 1) {
    const auto ms = c.m.empty() ? std::vector<int>{0, 1, 2, 3, 4, 5} : parse_integers(c.m);
    const auto r = range_text.empty() ? std::array<double, 2>{-4.0, 4.0} : parse_range(range_text);
    const int level = c.states.empty() ? 0 : parse_states(c.states).at(0).levels.at(0);
    emit_rows_1d(spec, ms, linspace(r[0], r[1], points ? points : 161), level, fmt, sink);
    return;
  }
  if (spec.dimension != 2) throw DomainError("plotdata covers the 1D and 2D figures");
  auto ms = c.m.empty() ? std::vector<int>{0, 2} : parse_integers(c.m);
  if (ms.size() == 1) ms.push_back(ms[0]);
  const model::ExtendedSystem ext(spec, model::REConfig{ms});
  const auto st = c.states.empty() ? model::Eigenstate::ground(2) : parse_states(c.states).at(0);
  const auto r = range_text.empty() ? std::array<double, 2>{-3.0, 3.0} : parse_range(range_text);
  const auto axis = linspace(r[0], r[1], points ? points : 61);
  ordered_json rows = ordered_json::array();
  if (fmt != Format::json) sink.buffer << "x,y,re_V,im_V,re_psi,im_psi\n";
  for (double x : axis)
    for (double y : axis) {
      const auto s = sample_at(ext, st, {cplx(x), cplx(y)});
      if (fmt == Format::json) {
        rows.push_back({{"x", x}, {"y", y}, {"V", cj(s.v)}, {"psi", cj(s.psi)}});
      } else {
        sink.buffer << csv_num(x) << "," << csv_num(y) << "," << csv_num(s.v.real()) << "," << csv_num(s.v.imag())
                    << "," << csv_num(s.psi.real()) << "," << csv_num(s.psi.imag()) << "\n";
      }
    }
  if (fmt == Format::json) sink.buffer << rows.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rationally extended oscillators: decoupling, spectra and numerical checks"};
  app.require_subcommand(1);
  Common c;
  std::optional<double> cutoff, spacing;
  std::string ratio, flavor, xs, range;
  int level = 0;
  std::size_t points = 0;
  bool exclude = false;

  const auto with_io = [&](CLI::App* sub, bool job_options) {
    add_spec_options(sub, c.spec);
    sub->add_option("--out", c.out, "Write output to this path instead of stdout");
    sub->add_option("--format", c.format, "text, json or csv");
    if (job_options) {
      sub->add_option("--m", c.m, "Co-dimensions, one per axis (a single value applies to all)");
      sub->add_option("--states", c.states, "Level vectors, e.g. 0,0;1,1 (0 = ground, n+1 = excited n)");
      sub->add_option("--job", c.job, "JSON job file (overrides the spec flags)");
      sub->add_option("--save-job", c.save_job, "Write the canonical JSON job to this path");
    }
  };
  auto* transform = app.add_subcommand("transform", "Print the decoupling map, k, a, b, tilde frequencies, reality");
  with_io(transform, false);
  auto* degeneracy = app.add_subcommand("degeneracy", "Coupling that gives a requested tilde-frequency ratio");
  with_io(degeneracy, false);
  degeneracy->add_option("--ratio", ratio, "Ratio r~ (2D, w~1/w~2) or u~ (3D), as p/q or decimal")->required();
  degeneracy->add_option("--flavor", flavor, "Require a real or imaginary coupling");
  auto* spectrum = app.add_subcommand("spectrum", "Degeneracy-grouped relative energies");
  with_io(spectrum, true);
  spectrum->add_option("--cutoff", cutoff, "Largest relative energy (default 10 max w~)");
  spectrum->add_option("--ratio", ratio, "Exact w~1:w~2 as p/q (2D)");
  auto* verify = app.add_subcommand("verify", "Residual, Rayleigh, parity-time, Gram and pole checks");
  with_io(verify, true);
  verify->add_option("--spacing", spacing, "Grid spacing");
  verify->add_flag("--exclude-poles", exclude, "Sample around real poles instead of refusing");
  auto* table = app.add_subcommand("table", "1D potential and eigenfunction samples per co-dimension");
  with_io(table, true);
  table->add_option("--x", xs, "Sample points, comma separated");
  table->add_option("--level", level, "Level sampled for psi (0 = ground)")->check(CLI::NonNegativeNumber);
  auto* plotdata = app.add_subcommand("plotdata", "Grid samples of Re/Im V and psi for figures");
  with_io(plotdata, true);
  plotdata->add_option("--range", range, "lo,hi on every axis");
  plotdata->add_option("--points", points, "Samples per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorClass::validation);
  }

  Sink sink{out, c.out, {}};
  int status = 0;
  try {
    if (*transform) cmd_transform(c, sink);
    else if (*degeneracy) cmd_degeneracy(c, ratio, flavor, sink);
    else if (*spectrum) cmd_spectrum(c, cutoff, ratio, sink);
    else if (*verify) status = cmd_verify(c, spacing, exclude, sink);
    else if (*table) cmd_table(c, xs, level, sink);
    else if (*plotdata) cmd_plotdata(c, range, points, sink);
    sink.flush();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::numerical);
  }
  return status;
}

}  // namespace rexosc::cli
