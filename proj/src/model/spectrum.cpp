#include "rexosc/model/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "rexosc/errors.hpp"

namespace rexosc::model {

std::optional<Rational> rational_approximation(double x, long long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents h/k.
  long long h0 = 1, h1 = static_cast<long long>(std::floor(x));
  long long k0 = 0, k1 = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= tol * std::max(1.0, std::abs(x)))
      return Rational{h1, k1};
    if (frac < 1e-300) break;
    const double inv = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long long h2 = a * h1 + h0;
    const long long k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
  }
  return std::nullopt;
}

namespace {

bool is_real(cplx w) { return std::abs(w.imag()) <= 1e-12 * std::abs(w); }

// Enumerate every level vector whose relative energy (real part) stays within the cutoff.
std::vector<Eigenstate> enumerate_states(const REConfig& config, const std::vector<cplx>& w, double cutoff) {
  const std::size_t d = w.size();
  const double slack = 1e-9 * std::max(1.0, std::abs(cutoff));
  std::vector<Eigenstate> out;
  if (cutoff < -slack) return out;
  Eigenstate cur{std::vector<int>(d, 0)};
  std::function<void(std::size_t, double)> walk = [&](std::size_t axis, double used) {
    if (axis == d) {
      out.push_back(cur);
      return;
    }
    cur.levels[axis] = 0;
    walk(axis + 1, used);
    const double step = w[axis].real();
    for (int level = 1;; ++level) {
      const double e = used + static_cast<double>(level + config.codimensions[axis]) * step;
      if (e > cutoff + slack) break;
      cur.levels[axis] = level;
      walk(axis + 1, e);
    }
    cur.levels[axis] = 0;
  };
  walk(0, 0.0);
  return out;
}

}  // namespace

SpectrumTable spectrum(const OscillatorSpec& spec, const REConfig& config, double energy_cutoff,
                       const std::optional<std::vector<Rational>>& ratios) {
  const auto sys = decouple(spec);
  const std::size_t d = sys.dimension();
  if (config.codimensions.size() != d) throw ShapeError("configuration dimension differs from the spec");
  for (int m : config.codimensions)
    if (m < 0) throw DomainError("co-dimensions must be non-negative");
  const auto& w = sys.tilde_frequencies;
  for (const cplx& v : w)
    if (!(v.real() > 0.0)) throw DomainError("tilde frequencies need a positive real part to bound the spectrum");

  const bool real = std::all_of(w.begin(), w.end(), is_real);
  std::vector<Rational> exact;
  if (real) {
    if (ratios) {
      if (ratios->size() != d) throw ShapeError("one frequency ratio per axis expected");
      for (std::size_t i = 0; i < d; ++i) {
        const Rational& r = (*ratios)[i];
        if (r.den <= 0 || r.num <= 0) throw DomainError("frequency ratios must be positive fractions");
        if (std::abs(r.value() - w[i].real() / w[0].real()) > 1e-9 * r.value())
          throw DomainError("supplied ratio " + std::to_string(r.num) + "/" + std::to_string(r.den) +
                            " does not match the decoupled frequencies on axis " + std::to_string(i));
      }
      exact = *ratios;
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        const auto r = rational_approximation(w[i].real() / w[0].real());
        if (!r) {
          exact.clear();
          break;
        }
        exact.push_back(*r);
      }
    }
  }

  SpectrumTable table;
  const auto states = enumerate_states(config, w, energy_cutoff);
  if (!exact.empty()) {
    table.exact_grouping = true;
    long long lcm = 1;
    for (const auto& r : exact) lcm = std::lcm(lcm, r.den / std::gcd(r.num, r.den));
    std::vector<long long> unit(d);  // w~_i in units of w~_0 / lcm
    for (std::size_t i = 0; i < d; ++i) {
      const long long g = std::gcd(exact[i].num, exact[i].den);
      unit[i] = (exact[i].num / g) * (lcm / (exact[i].den / g));
    }
    std::map<long long, std::vector<Eigenstate>> groups;
    for (const auto& s : states) {
      long long key = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (s.levels[i] > 0) key += static_cast<long long>(s.levels[i] + config.codimensions[i]) * unit[i];
      groups[key].push_back(s);
    }
    for (auto& [key, members] : groups) {
      SpectrumEntry e;
      e.energy = w[0].real() * static_cast<double>(key) / static_cast<double>(lcm);
      e.multiplicity = members.size();
      e.states = std::move(members);
      table.entries.push_back(std::move(e));
    }
    return table;
  }

  std::vector<std::pair<cplx, Eigenstate>> tagged;
  tagged.reserve(states.size());
  for (const auto& s : states) tagged.emplace_back(relative_energy(config, s, sys), s);
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    return a.first.real() != b.first.real() ? a.first.real() < b.first.real() : a.first.imag() < b.first.imag();
  });
  for (auto& [energy, s] : tagged) {
    if (!table.entries.empty()) {
      auto& last = table.entries.back();
      if (std::abs(energy - last.energy) <= 1e-9 * std::max(1.0, std::abs(energy))) {
        last.states.push_back(s);
        last.multiplicity = last.states.size();
        continue;
      }
    }
    SpectrumEntry e;
    e.energy = energy;
    e.multiplicity = 1;
    e.states.push_back(s);
    e.complex = std::abs(energy.imag()) > 1e-12 * std::max(1.0, std::abs(energy));
    table.entries.push_back(std::move(e));
  }
  return table;
}

}  // namespace rexosc::model
