#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rexosc/model/extension.hpp"
#include "rexosc/verify/poles.hpp"

namespace rexosc::cli {

struct GridSettings {
  std::optional<double> spacing;
  std::optional<verify::Box> box;
  bool exclude_poles = false;

  friend bool operator==(const GridSettings&, const GridSettings&) = default;
};

enum class Format { text, json, csv };

struct JobConfig {
  model::OscillatorSpec spec;
  model::REConfig config;
  std::vector<model::Eigenstate> states;
  GridSettings grid;
  Format format = Format::text;

  /// Spec consistency plus co-dimension admissibility.
  void validate() const;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

std::string_view to_string(Format f);
Format parse_format(std::string_view text);

/// "real:1.5", "imaginary:-2", "i:0.3"; a bare number is real.
transform::CouplingValue parse_coupling(std::string_view text);
/// Shortest text that parses back to the same value.
std::string format_coupling(const transform::CouplingValue& c);

/// "0,0;1,2" -> two level vectors.
std::vector<model::Eigenstate> parse_states(std::string_view text);
/// "1,2.5,3".
std::vector<double> parse_numbers(std::string_view text);
std::vector<int> parse_integers(std::string_view text);

/// Canonical JSON: fixed key order, shortest round-trip numbers, 2-space indent.
std::string to_json(const JobConfig& job);
JobConfig job_from_json(std::string_view text);

/// Shortest decimal that reads back to `v`.
std::string format_double(double v);

}  // namespace rexosc::cli
