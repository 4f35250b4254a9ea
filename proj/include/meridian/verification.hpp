#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meridian/grid.hpp"
#include "meridian/meridian.hpp"
#include "meridian/surface.hpp"

namespace meridian {

/// Outcome of one numerical certificate. passed ⇔ max_residual ≤ threshold.
struct VerificationReport {
  std::string claim_id;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  double worst_u = 0.0;
  double worst_v = 0.0;
  std::size_t samples = 0;
  /// Reported for the record only; never affects an exit status.
  bool informational = false;
  /// Named sub-residuals and auxiliary values, in insertion order.
  std::vector<std::pair<std::string, double>> details;

  double detail(const std::string& name) const;
};

/// max |ϰ| over the grid. Parabolic patches only (UsageError otherwise).
VerificationReport verify_flat_normal_connection(const SurfacePatch& patch, const GridSpec& grid, double tol);

/// max of |L|, |N| and the deviation of M from its closed form, all in the
/// family's explicit normal frame. Parabolic patches only.
VerificationReport verify_second_fundamental_form(const SurfacePatch& patch, const GridSpec& grid, double tol);

/// max |⟨H,H⟩| / max(H1² + H2², floor); a point with H = 0 has residual ∞.
VerificationReport verify_marginally_trapped(const SurfacePatch& patch, const GridSpec& grid, double tol,
                                             double floor = 1e-300);

/// Residuals of −ug″ + 2g′ = ±a·sgn(c ∓ au)(−2g′)^{3/2}, of h′ + h/u ± a/u = 0 for
/// h = sgn(c ∓ au)/√(−2g′), and of g′ = −u²/(2(c ∓ au)²), over u samples.
VerificationReport verify_ode_chain(const MTFamilyParams& params, const GridAxis& u_axis, double tol);
VerificationReport verify_ode_chain(const MTFamilyParams& params, int u_samples, double tol);

/// stdev of κ̄ plus |mean − expected| over samples on the central 90% of the
/// section arc.
VerificationReport verify_constant_section_curvature(const SectionParams& section, int samples, double tol,
                                                     std::optional<Interval> v_range = {});

/// κ̄ ≡ 0 family: n1 constant, z in a fixed hyperplane, no marginally trapped point.
/// Throws UsageError when κ̄ ≢ 0 within tol.
VerificationReport verify_case1_hyperplane(const ProfileCurvePhi& phi, const ProfilePair& fp, const GridSpec& grid,
                                           double tol);

/// Rank test: z(u, v0) − z(u_ref, v0) ∈ span{ξ1, z̄(v0)}; residual σ3/σ1.
VerificationReport verify_meridian_planarity(const SurfacePatch& patch, const ProfileCurvePhi& phi, double v0,
                                             int u_samples, double tol);
VerificationReport verify_meridian_planarity(const SurfacePatch& patch, double v0, int u_samples, double tol);

/// Numerical E, F, G, k, K, ϰ, M, H1, H2 against the family's closed forms;
/// residual is the max of |num − closed| / max(|closed|, 1).
VerificationReport verify_closed_form_invariants(const SurfacePatch& patch, const GridSpec& grid, double tol);

/// Whether some lightlike normal direction n1 ± n2 is constant over the grid.
/// Informational: the outcome is recorded, not asserted.
VerificationReport verify_cone_lightlike_normal(const SurfacePatch& patch, const GridSpec& grid, double tol);

/// Every claim of the classification, each on its canonical example family.
std::vector<VerificationReport> run_paper_suite(double tol = 1e-9);

}  // namespace meridian
