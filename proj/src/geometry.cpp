#include "circlesys/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "circlesys/error.hpp"

namespace circlesys {

namespace {

constexpr double kPi = std::numbers::pi;

double relative_gap(double d, double want) { return std::abs(d - want) / want; }

}  // namespace

double inner_mate_radius(double r1, double r2, double phi) {
  if (!(r2 > 0.0) || !(r2 < r1))
    throw Error(Errc::DomainError, "inner mate needs 0 < r2 < r1");
  if (!(phi > 0.0) || phi > kPi) throw Error(Errc::DomainError, "inner mate needs phi in (0, pi]");
  // Same formula with 1 - cos(phi) written as 2 sin^2(phi/2); avoids the
  // cancellation for small phi.
  const double h = std::sin(0.5 * phi);
  return 2.0 * r1 * (r1 - r2) * h * h / (2.0 * r2 + 2.0 * (r1 - r2) * h * h);
}

double outer_mate_radius(double r1, double r2, double phi) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw Error(Errc::DomainError, "outer mate needs positive radii");
  const double h = std::sin(0.5 * phi);
  const double denom = 2.0 * r2 - 2.0 * (r1 + r2) * h * h;
  // A denominator within rounding of zero counts as phi_max itself.
  if (!(phi > 0.0) || phi >= outer_phi_max(r1, r2) ||
      !(denom > 8.0 * std::numeric_limits<double>::epsilon() * (r1 + r2)))
    throw Error(Errc::DomainError, "outer mate needs phi in (0, phi_max)");
  return 2.0 * r1 * (r1 + r2) * h * h / denom;
}

double outer_phi_max(double r1, double r2) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw Error(Errc::DomainError, "phi_max needs positive radii");
  return std::acos((r1 - r2) / (r1 + r2));
}

double inner_mate_construction_defect(double r1, double r2, double phi) {
  const double r = inner_mate_radius(r1, r2, phi);
  const Circle big{0.0, 0.0, r1};
  const Circle second{r1 - r2, 0.0, r2};
  const Circle mate{(r1 - r) * std::cos(phi), (r1 - r) * std::sin(phi), r};
  return std::max(relative_gap(center_distance(mate, second), r + r2),
                  std::abs(center_distance(mate, big) - (r1 - r)) / r1);
}

double outer_mate_construction_defect(double r1, double r2, double phi) {
  const double r = outer_mate_radius(r1, r2, phi);
  const Circle base{0.0, 0.0, r1};
  const Circle second{r1 + r2, 0.0, r2};
  const Circle mate{(r1 + r) * std::cos(phi), (r1 + r) * std::sin(phi), r};
  return std::max(relative_gap(center_distance(mate, second), r + r2),
                  relative_gap(center_distance(mate, base), r1 + r));
}

std::array<Circle, 4> ArcPairConfig::circles() const {
  const double s = side == Side::Interior ? -1.0 : 1.0;
  auto at = [&](double t, double rho) {
    return Circle{(R + s * rho) * std::cos(t), (R + s * rho) * std::sin(t), rho};
  };
  return {at(alpha, rho1), at(beta, rho2), at(alpha_in, rho1_in), at(beta_in, rho2_in)};
}

namespace {

double mate_for(Side side, double R, double rho, double span) {
  return side == Side::Interior ? inner_mate_radius(R, rho, span) : outer_mate_radius(R, rho, span);
}

// Separation required between circles of different pairs.
double separation_margin(double R) { return 1e-9 * R; }

bool pairs_separated(const ArcPairConfig& cfg) {
  const auto c = cfg.circles();
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      if (!(center_distance(c[i], c[j]) > c[i].r + c[j].r + separation_margin(cfg.R))) return false;
  return true;
}

}  // namespace

bool arc_inequality_check(const ArcPairConfig& cfg) {
  auto invalid = [](const std::string& why) { return Error(Errc::InvalidConfig, why); };
  if (!(cfg.R > 0.0) || !(cfg.rho1 > 0.0) || !(cfg.rho2 > 0.0) || !(cfg.rho1_in > 0.0) ||
      !(cfg.rho2_in > 0.0))
    throw invalid("radii must be positive");
  if (!(cfg.alpha < cfg.alpha_in && cfg.alpha_in < cfg.beta_in && cfg.beta_in < cfg.beta))
    throw invalid("touch points must appear in the order A, A', B', B");
  if (!(cfg.beta - cfg.alpha < kPi)) throw invalid("the arc AB must be shorter than pi");
  double want2 = 0.0, want2_in = 0.0;
  try {
    want2 = mate_for(cfg.side, cfg.R, cfg.rho1, cfg.beta - cfg.alpha);
    want2_in = mate_for(cfg.side, cfg.R, cfg.rho1_in, cfg.beta_in - cfg.alpha_in);
  } catch (const Error& e) {
    throw invalid(std::string("pair radii outside the mate domain: ") + e.what());
  }
  if (std::abs(cfg.rho2 - want2) > 1e-9 * want2 || std::abs(cfg.rho2_in - want2_in) > 1e-9 * want2_in)
    throw invalid("a pair does not touch itself and the base circle");
  if (!pairs_separated(cfg)) throw invalid("circles of different pairs cross or touch");

  constexpr double margin = 1e-12;
  const double inner = cfg.beta_in - cfg.alpha_in;
  return inner < (cfg.alpha_in - cfg.alpha) - margin && inner < (cfg.beta - cfg.beta_in) - margin;
}

std::optional<ArcPairConfig> sample_config(Side side, std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer decorrelates neighboring (seed, index) pairs.
  std::uint64_t key = seed ^ (index + 0x9E3779B97F4A7C15ull) * 0xBF58476D1CE4E5B9ull;
  key = (key ^ (key >> 30)) * 0xBF58476D1CE4E5B9ull;
  key = (key ^ (key >> 27)) * 0x94D049BB133111EBull;
  key ^= key >> 31;
  std::mt19937_64 rng(key);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  auto log_uniform = [&](double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); };

  ArcPairConfig cfg;
  cfg.R = 1.0;
  cfg.side = side;
  cfg.alpha = uniform(0.0, 2.0 * kPi);
  double span = 0.0;
  if (side == Side::Interior) {
    cfg.rho1 = uniform(0.02, 0.98);
    span = uniform(0.02, kPi - 0.02);
  } else {
    cfg.rho1 = log_uniform(0.02, 5.0);
    span = uniform(0.02, 0.98) * std::min(outer_phi_max(cfg.R, cfg.rho1), kPi - 0.02);
  }
  cfg.beta = cfg.alpha + span;
  cfg.rho2 = mate_for(side, cfg.R, cfg.rho1, span);

  cfg.alpha_in = cfg.alpha + uniform(0.0, 1.0) * span;
  if (side == Side::Interior) {
    cfg.rho1_in = log_uniform(1e-4, 0.98);
    cfg.beta_in = cfg.alpha_in + uniform(0.0, 1.0) * (cfg.beta - cfg.alpha_in);
  } else {
    cfg.rho1_in = log_uniform(1e-4, 5.0);
    const double room = std::min(cfg.beta - cfg.alpha_in, outer_phi_max(cfg.R, cfg.rho1_in));
    cfg.beta_in = cfg.alpha_in + uniform(0.0, 1.0) * room;
  }
  if (!(cfg.alpha < cfg.alpha_in && cfg.alpha_in < cfg.beta_in && cfg.beta_in < cfg.beta))
    return std::nullopt;
  try {
    cfg.rho2_in = mate_for(side, cfg.R, cfg.rho1_in, cfg.beta_in - cfg.alpha_in);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!pairs_separated(cfg)) return std::nullopt;
  return cfg;
}

namespace {

// Outcome of one candidate: 0 rejected, 1 valid and holds, 2 valid and violated.
int evaluate_candidate(Side side, std::uint64_t seed, std::uint64_t index) {
  const auto cfg = sample_config(side, seed, index);
  if (!cfg) return 0;
  return arc_inequality_check(*cfg) ? 1 : 2;
}

void tally(LemmaSweep& out, int outcome, long count) {
  if (out.valid >= count) return;
  if (outcome == 0) {
    ++out.rejected;
  } else {
    ++out.valid;
    if (outcome == 2) ++out.violations;
  }
}

}  // namespace

LemmaSweep sweep_arc_lemma(Side side, std::uint64_t seed, long count) {
  LemmaSweep out;
  constexpr long batch = 4096;
  std::vector<int> outcome(batch);
  for (std::uint64_t start = 0; out.valid < count; start += batch) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < batch; ++i) outcome[i] = evaluate_candidate(side, seed, start + i);
    for (long i = 0; i < batch && out.valid < count; ++i) tally(out, outcome[i], count);
  }
  return out;
}

LemmaSweep sweep_arc_lemma_serial(Side side, std::uint64_t seed, long count) {
  LemmaSweep out;
  for (std::uint64_t i = 0; out.valid < count; ++i) tally(out, evaluate_candidate(side, seed, i), count);
  return out;
}

double descartes_check(const Circle& c1, const Circle& c2, const Circle& c3, const Circle& c4,
                       double tol) {
  const std::array<Circle, 4> c{c1, c2, c3, c4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (tangency_defect(c[i], c[j]) > tol)
        throw Error(Errc::NotTangent, "circles " + std::to_string(i) + " and " + std::to_string(j) +
                                          " do not touch");
  double sum = 0.0, squares = 0.0;
  for (int i = 0; i < 4; ++i) {
    bool encloses = true;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      const double d = center_distance(c[i], c[j]);
      encloses = encloses && c[i].r > c[j].r &&
                 std::abs(d - (c[i].r - c[j].r)) < std::abs(d - (c[i].r + c[j].r));
    }
    const double k = (encloses ? -1.0 : 1.0) / c[i].r;
    sum += k;
    squares += k * k;
  }
  return std::abs(sum * sum - 2.0 * squares) / std::max(sum * sum, 2.0 * squares);
}

}  // namespace circlesys
