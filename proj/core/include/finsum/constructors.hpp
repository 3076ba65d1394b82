#pragma once

#include <string>
#include <vector>

#include "finsum/criteria.hpp"

namespace finsum {

// A verified solution: every constructor checks its algebraic identity
// exactly before returning, so holding one of these means A*x = 0.
struct SolutionVector {
    std::vector<BigInt> entries;  // all >= 1
    std::string provenance;
    bool distinct = false;        // entries pairwise different
    std::string identity;         // the verified identity with concrete numbers
};

enum class EpsilonSide { Original, Swapped };

// The digit-vector family behind the signature bound: n-1 vectors, each
// solving the equation, built around a pivot variable (the smallest left
// coefficient, or by symmetry the smallest right one). Both families are
// built; the one with the smaller maximum entry wins and the loser is kept
// for audit.
struct EpsilonMatrix {
    std::vector<std::vector<BigInt>> vectors;  // n-1 vectors of length n
    EpsilonSide side = EpsilonSide::Original;
    BigInt max_entry;
    std::vector<std::vector<BigInt>> audit_other;
    BigInt audit_other_max;
};

// x_i = sum_j 1_{I_j}(i) * y_j for a certified cover; A*x = 0 by the cover's
// zero-sum property, re-verified exactly.
SolutionVector solution_from_cover(const LinearSystem& sys, const SubsetCover& cover,
                                   std::span<const BigInt> ys);

// (y1, y1 + (a+b)*y2, y1 + b*y2) solves ax + by = (a+b)z; entries are always
// pairwise distinct. Requires gcd(a, b) = 1.
SolutionVector basecase_solution(const BigInt& a, const BigInt& b, const BigInt& y1,
                                 const BigInt& y2);

EpsilonMatrix epsilon_matrix(const ShiftInvariantEq& eq);

// x = sum_j ys[j] * vectors[j]; digits stay below any k > max_entry, so the
// solution lives in FS^k((ys)).
SolutionVector solution_from_epsilon(const ShiftInvariantEq& eq, const EpsilonMatrix& em,
                                     std::span<const BigInt> ys);

// The explicit family (y2+y1, y2+7*y1, y2, y2+2*y1) solving
// 3x1 + 5x2 + 11x3 = 19x4, with y1-digits (1,7,0,2) all below 8.
SolutionVector example19_solution(const BigInt& y1, const BigInt& y2);

// Adds m to every entry; valid exactly because the coefficients sum to zero.
SolutionVector shift_solution(const SolutionVector& sol, const BigInt& m,
                              std::span<const BigInt> coeffs);

}  // namespace finsum
