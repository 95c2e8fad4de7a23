#pragma once

#include <optional>
#include <vector>

#include "rexosc/model/extension.hpp"

namespace rexosc::model {

struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Best rational approximation with denominator <= max_den, if it is within tol of x.
std::optional<Rational> rational_approximation(double x, long long max_den = 1000, double tol = 1e-12);

struct SpectrumEntry {
  cplx energy;  // relative energy
  std::size_t multiplicity = 0;
  std::vector<Eigenstate> states;
  bool complex = false;
};

struct SpectrumTable {
  std::vector<SpectrumEntry> entries;
  bool exact_grouping = false;  // grouped by integer arithmetic on a common denominator
};

/// Levels with relative energy <= cutoff, grouped by energy.
/// `ratios`, if given, are the exact values of w~_i / w~_0 (first entry 1/1); they must agree with
/// the decoupled frequencies to 1e-9. Without them, ratios are recognized when a continued-fraction
/// convergent with denominator <= 1000 reproduces them; otherwise grouping uses a 1e-9 tolerance.
SpectrumTable spectrum(const OscillatorSpec& spec, const REConfig& config, double energy_cutoff,
                       const std::optional<std::vector<Rational>>& ratios = std::nullopt);

}  // namespace rexosc::model
