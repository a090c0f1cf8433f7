#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "circlesys/circle.hpp"

namespace circlesys {

/// Radius of the circle inside C1 (radius r1) that touches C1 at angle phi
/// from the touching point p1 of C1 and C2, and touches C2 (radius r2 < r1,
/// inside C1) from outside. Requires 0 < r2 < r1 and phi in (0, pi].
double inner_mate_radius(double r1, double r2, double phi);

/// Radius of the circle outside C1 that touches C1 at angle phi from p1 and
/// touches C2 (outside C1, touching it at p1). Requires phi in (0, outer_phi_max).
double outer_mate_radius(double r1, double r2, double phi);

/// Angle at which the outer mate degenerates into the common tangent line.
double outer_phi_max(double r1, double r2);

/// Builds the three circles of a mate evaluation explicitly and returns the
/// largest relative tangency defect among the two required contacts.
double inner_mate_construction_defect(double r1, double r2, double phi);
double outer_mate_construction_defect(double r1, double r2, double phi);

enum class Side { Interior, Exterior };

/// Two tangent pairs of circles on one side of a base circle of radius R
/// centered at the origin. The outer pair touches the base circle at angles
/// alpha < beta, the inner pair at alpha_in < beta_in, nested inside.
struct ArcPairConfig {
  double R = 1.0;
  Side side = Side::Interior;
  double alpha = 0.0, beta = 0.0;
  double alpha_in = 0.0, beta_in = 0.0;
  double rho1 = 0.0, rho2 = 0.0;        // outer pair radii (at alpha, beta)
  double rho1_in = 0.0, rho2_in = 0.0;  // inner pair radii

  /// The four circles in the order outer-1, outer-2, inner-1, inner-2.
  std::array<Circle, 4> circles() const;
};

/// Checks that the inner pair's arc is shorter than both gaps to the outer
/// pair: (beta_in - alpha_in) < (alpha_in - alpha) and < (beta - beta_in),
/// each with a 1e-12 margin. Throws InvalidConfig if the configuration is not
/// valid (wrong order, span >= pi, mate radii off, crossing circles).
bool arc_inequality_check(const ArcPairConfig& cfg);

/// Deterministic candidate number `index` of the sampler for `seed`. Returns
/// nullopt if the candidate is rejected (crossing or touching pairs).
std::optional<ArcPairConfig> sample_config(Side side, std::uint64_t seed, std::uint64_t index);

struct LemmaSweep {
  long valid = 0;
  long rejected = 0;
  long violations = 0;
  friend bool operator==(const LemmaSweep&, const LemmaSweep&) = default;
};

/// Draws candidates in index order until `count` valid configurations were
/// checked. Candidates are evaluated in parallel batches; the result does not
/// depend on the thread count.
LemmaSweep sweep_arc_lemma(Side side, std::uint64_t seed, long count);
/// Single-threaded reference for `sweep_arc_lemma`.
LemmaSweep sweep_arc_lemma_serial(Side side, std::uint64_t seed, long count);

/// Constraint bits for the eight-point arc search.
enum ArcConstraint : unsigned {
  kLeftBelowFirstGap = 1u << 0,   // z5 - z2 < z2 - z1
  kLeftBelowSecondGap = 1u << 1,  // z5 - z2 < z6 - z5
  kRightBelowFirstGap = 1u << 2,  // z7 - z4 < z4 - z3
  kRightBelowSecondGap = 1u << 3, // z7 - z4 < z8 - z7
  kAllArcConstraints = 0xFu,
};

struct InfeasibilityReport {
  bool feasible_found = false;
  long long tested = 0;                // placements covered: C(grid - 1, 8)
  long long evaluated = 0;             // search nodes (partial placements) visited
  std::optional<std::array<int, 8>> witness;  // smallest feasible grid indices
};

/// Searches increasing placements z_k = phi * i_k / grid, 0 < i_1 < ... < i_8
/// < grid, for one that satisfies the nested-pair arc constraints (pairs
/// (z1,z6), (z2,z5) on one side, (z3,z8), (z4,z7) on the other). Pruned and
/// parallel over i_1. Throws DomainError unless 0 < phi < pi and grid >= 8.
InfeasibilityReport gadget_arc_infeasibility(double phi, int grid,
                                             unsigned constraints = kAllArcConstraints);
/// Unpruned serial enumeration of every placement; reference for small grids.
InfeasibilityReport gadget_arc_infeasibility_reference(double phi, int grid,
                                                       unsigned constraints = kAllArcConstraints);

/// Relative Descartes defect |(sum k)^2 - 2 sum k^2| / max of the two terms.
/// A circle containing the other three gets negative curvature. Throws
/// NotTangent unless every pair touches within `tol`.
double descartes_check(const Circle& c1, const Circle& c2, const Circle& c3, const Circle& c4,
                       double tol = 1e-6);

}  // namespace circlesys
