#pragma once

// Published six-decimal values of d(A_{l,m}) for 0 <= l <= m <= 5. The printed
// digits agree with truncation of the exact values, so a computed value v
// matches an entry t when t <= v < t + 1e-6; comparisons use +-5e-6.

#include <array>

namespace kfull::reference {

struct TableCell {
  unsigned l, m;
  double value;
};

inline constexpr std::array<TableCell, 21> kTableK2{{
    {0, 0, 0.049227}, {0, 1, 0.107920}, {0, 2, 0.079380}, {0, 3, 0.030530}, {0, 4, 0.007444},
    {0, 5, 0.001278}, {1, 1, 0.158761}, {1, 2, 0.091591}, {1, 3, 0.029777}, {1, 4, 0.006393},
    {1, 5, 0.000991}, {2, 2, 0.044666}, {2, 3, 0.012786}, {2, 4, 0.002478}, {2, 5, 0.000352},
    {3, 3, 0.003304}, {3, 4, 0.000588}, {3, 5, 0.000077}, {4, 4, 0.000097}, {4, 5, 0.000012},
    {5, 5, 0.000001},
}};

inline constexpr std::array<TableCell, 21> kTableK3{{
    {0, 0, 0.000146}, {0, 1, 0.000898}, {0, 2, 0.002413}, {0, 3, 0.003899}, {0, 4, 0.004360},
    {0, 5, 0.003654}, {1, 1, 0.004826}, {1, 2, 0.011698}, {1, 3, 0.017443}, {1, 4, 0.018274},
    {1, 5, 0.014504}, {2, 2, 0.026165}, {2, 3, 0.036549}, {2, 4, 0.036261}, {2, 5, 0.027472},
    {3, 3, 0.048348}, {3, 4, 0.045787}, {3, 5, 0.033318}, {4, 4, 0.041647}, {4, 5, 0.029247},
    {5, 5, 0.019896},
}};

inline constexpr double kTableTolerance = 5e-6;

/// nullptr when no table was published for k.
inline const std::array<TableCell, 21>* published_table(unsigned k) {
  if (k == 2) return &kTableK2;
  if (k == 3) return &kTableK3;
  return nullptr;
}

}  // namespace kfull::reference
