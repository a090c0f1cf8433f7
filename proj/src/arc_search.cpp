#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "circlesys/error.hpp"
#include "circlesys/geometry.hpp"

namespace circlesys {

namespace {

constexpr double kMargin = 1e-12;

void check_domain(double phi, int grid) {
  if (!(phi > 0.0) || !(phi < std::numbers::pi))
    throw Error(Errc::DomainError, "the arc bound only holds for 0 < phi < pi");
  if (grid < 8) throw Error(Errc::DomainError, "grid must be at least 8");
}

long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool less_with_margin(double a, double b) { return a < b - kMargin; }

// z[0..7] are z1..z8.
bool satisfies(const double* z, unsigned mask) {
  const double left = z[4] - z[1], right = z[6] - z[3];
  if ((mask & kLeftBelowFirstGap) && !less_with_margin(left, z[1] - z[0])) return false;
  if ((mask & kLeftBelowSecondGap) && !less_with_margin(left, z[5] - z[4])) return false;
  if ((mask & kRightBelowFirstGap) && !less_with_margin(right, z[3] - z[2])) return false;
  if ((mask & kRightBelowSecondGap) && !less_with_margin(right, z[7] - z[6])) return false;
  return true;
}

struct Branch {
  long long evaluated = 0;
  std::optional<std::array<int, 8>> witness;
};

// All placements with the given first index, in lexicographic order, cutting
// loops where a constraint can no longer hold for larger indices.
Branch search_from(int i1, double phi, int grid, unsigned mask) {
  Branch out;
  const int top = grid - 1;
  auto z = [&](int i) { return phi * i / grid; };
  std::array<int, 8> idx{};
  double zs[8];
  idx[0] = i1;
  zs[0] = z(i1);
  for (idx[1] = i1 + 1; idx[1] <= top - 6; ++idx[1]) {
    zs[1] = z(idx[1]);
    ++out.evaluated;
    for (idx[2] = idx[1] + 1; idx[2] <= top - 5; ++idx[2]) {
      zs[2] = z(idx[2]);
      ++out.evaluated;
      for (idx[3] = idx[2] + 1; idx[3] <= top - 4; ++idx[3]) {
        zs[3] = z(idx[3]);
        ++out.evaluated;
        for (idx[4] = idx[3] + 1; idx[4] <= top - 3; ++idx[4]) {
          zs[4] = z(idx[4]);
          ++out.evaluated;
          // z5 - z2 only grows with i5.
          if ((mask & kLeftBelowFirstGap) && !less_with_margin(zs[4] - zs[1], zs[1] - zs[0])) break;
          for (idx[5] = idx[4] + 1; idx[5] <= top - 2; ++idx[5]) {
            zs[5] = z(idx[5]);
            ++out.evaluated;
            if ((mask & kLeftBelowSecondGap) && !less_with_margin(zs[4] - zs[1], zs[5] - zs[4])) continue;
            for (idx[6] = idx[5] + 1; idx[6] <= top - 1; ++idx[6]) {
              zs[6] = z(idx[6]);
              ++out.evaluated;
              // z7 - z4 only grows with i7.
              if ((mask & kRightBelowFirstGap) && !less_with_margin(zs[6] - zs[3], zs[3] - zs[2])) break;
              for (idx[7] = idx[6] + 1; idx[7] <= top; ++idx[7]) {
                zs[7] = z(idx[7]);
                ++out.evaluated;
                if (satisfies(zs, mask)) {
                  out.witness = idx;
                  return out;
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

void enumerate_all(int depth, int lowest, double phi, int grid, unsigned mask, std::array<int, 8>& idx,
                   double* zs, InfeasibilityReport& out) {
  if (depth == 8) {
    ++out.evaluated;
    if (!out.witness && satisfies(zs, mask)) {
      out.witness = idx;
      out.feasible_found = true;
    }
    return;
  }
  for (int i = lowest; i <= grid - 1; ++i) {
    idx[depth] = i;
    zs[depth] = phi * i / grid;
    enumerate_all(depth + 1, i + 1, phi, grid, mask, idx, zs, out);
  }
}

}  // namespace

InfeasibilityReport gadget_arc_infeasibility(double phi, int grid, unsigned constraints) {
  check_domain(phi, grid);
  InfeasibilityReport out;
  out.tested = choose(grid - 1, 8);
  const int first_max = grid - 8;
  std::vector<Branch> branches(first_max > 0 ? first_max : 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i1 = 1; i1 <= first_max; ++i1) branches[i1 - 1] = search_from(i1, phi, grid, constraints);
  for (const Branch& b : branches) {
    out.evaluated += b.evaluated;
    if (b.witness && !out.witness) out.witness = b.witness;
  }
  out.feasible_found = out.witness.has_value();
  return out;
}

InfeasibilityReport gadget_arc_infeasibility_reference(double phi, int grid, unsigned constraints) {
  check_domain(phi, grid);
  InfeasibilityReport out;
  out.tested = choose(grid - 1, 8);
  std::array<int, 8> idx{};
  double zs[8];
  enumerate_all(0, 1, phi, grid, constraints, idx, zs, out);
  return out;
}

}  // namespace circlesys
