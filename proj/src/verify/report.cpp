#include "rexosc/verify/report.hpp"

#include <algorithm>
#include <sstream>

#include "rexosc/errors.hpp"

namespace rexosc::verify {
namespace {

double default_spacing(std::size_t dimension) {
  switch (dimension) {
    case 1: return 1e-3;
    case 2: return 0.04;
    default: return 0.12;
  }
}

std::optional<transform::ParityOperator> choose_parity(const model::ExtendedSystem& ext, const VerifyOptions& o) {
  const std::size_t d = ext.dimension();
  if (o.parity) {
    if (*o.parity == "identity") return identity_parity(d);
    return d == 1 ? transform::reflection_1d() : transform::parity_by_name(d, *o.parity);
  }
  if (ext.spec().is_hermitian()) return identity_parity(d);
  const auto cls = transform::pt_classification(ext.spec());
  if (cls.verified.empty()) return std::nullopt;
  return d == 1 ? transform::reflection_1d() : transform::parity_by_name(d, cls.verified.front());
}

}  // namespace

VerificationReport verify_states(const model::ExtendedSystem& ext, const std::vector<model::Eigenstate>& states,
                                 const VerifyOptions& options) {
  VerificationReport rep;
  std::ostringstream notes;
  const Box box = options.box.value_or(default_box(ext));
  rep.poles = pole_scan(ext, box);
  rep.predicted_offset = model::ground_offset(ext.config(), ext.system());
  if (!model::is_admissible(ext.spec(), ext.config())) notes << "co-dimensions outside the admissible set; ";
  if (!rep.poles.empty() && !options.scan.exclude_poles) {
    notes << rep.poles.size() << " real pole(s) in the box; grid checks skipped";
    rep.notes = notes.str();
    return rep;
  }
  const auto grid = grid_over(box, options.spacing.value_or(default_spacing(ext.dimension())));
  const auto parity = choose_parity(ext, options);
  rep.parity = parity ? parity->name : "none";
  if (!parity) notes << "no parity-time symmetry among the reflections; ";

  for (const auto& s : states) {
    StateReport sr;
    sr.state = s;
    const auto res = residual_scan(ext, s, grid, options.scan);
    sr.max_residual = res.max_residual;
    sr.fitted_offset = res.fitted_offset;
    sr.relative_energy = res.relative_energy;
    try {
      sr.rayleigh = rayleigh_energy(ext, s, grid, options.scan);
    } catch (const IndeterminateError&) {
      notes << "Rayleigh quotient indeterminate for a state; ";
    }
    if (parity) {
      sr.pt_predicted = model::predicted_pt_eigenvalue(ext, s, *parity);
      try {
        const auto pt = pt_parity_eigenvalue(ext, s, *parity, grid, options.scan);
        sr.pt_eigenvalue = pt.eigenvalue;
        sr.pt_residual = pt.residual;
      } catch (const IndeterminateError&) {
      }
    }
    rep.states.push_back(std::move(sr));
  }
  if (!rep.states.empty()) {
    rep.fitted_offset = rep.states.front().fitted_offset;
    rep.pt_eigenvalue = rep.states.front().pt_eigenvalue;
    for (const auto& s : rep.states) {
      rep.max_residual = std::max(rep.max_residual, s.max_residual);
      rep.offset_spread = std::max(rep.offset_spread, std::abs(s.fitted_offset - rep.fitted_offset));
    }
  }
  if (ext.spec().is_hermitian() && !states.empty()) rep.gram = orthogonality_gram(ext, states, grid, options.scan);
  else if (!states.empty()) notes << "Gram matrix omitted: non-Hermitian spec; ";
  rep.notes = notes.str();
  return rep;
}

}  // namespace rexosc::verify
