#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finsum/bigint.hpp"
#include "finsum/error.hpp"

namespace finsum {

// Subset enumeration is 2^n, so column/row counts are capped up front.
struct CriteriaLimits {
    int max_cols = 22;
    int max_rows = 8;
};

// Integer coefficient matrix A in Z^{l x n}; the object every regularity
// criterion is stated about. Columns must be nonzero.
struct LinearSystem {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> entries;  // row-major, rows*cols

    const BigInt& at(int row, int col) const { return entries[row * cols + col]; }
    BigInt& at(int row, int col) { return entries[row * cols + col]; }

    // Single equation a_1 x_1 + ... + a_n x_n = 0 as a 1 x n system.
    static LinearSystem single_equation(std::vector<BigInt> coeffs);
};

void validate_system(const LinearSystem& sys, const CriteriaLimits& limits = {});

// Family I_1, ..., I_m of column index sets (1-based, each sorted).
struct SubsetCover {
    std::vector<std::vector<int>> subsets;
};

// Column permutation split into consecutive blocks; block 0 sums to zero and
// every later block's sum is the recorded rational combination of the columns
// strictly before it.
struct BlockOrdering {
    std::vector<int> column_order;                   // 1-based, a permutation
    std::vector<int> block_sizes;                    // sums to cols
    std::vector<std::vector<Rational>> witnesses;    // witnesses[b][j]: coeff of
                                                     // column_order[j] for block b
                                                     // (witnesses[0] is empty)
};

// Shift-invariant equation a_1 x_1 + ... + a_r x_r = a_{r+1} x_{r+1} + ... + a_n x_n,
// both sides sorted ascending, all coefficients >= 1, equal side sums.
// At least three variables: with two the equation degenerates to x_1 = x_2,
// which has no distinct solutions at all.
struct ShiftInvariantEq {
    std::vector<BigInt> left;
    std::vector<BigInt> right;

    int vars() const { return static_cast<int>(left.size() + right.size()); }
    // (a_1, ..., a_r, -a_{r+1}, ..., -a_n): the row-vector of the 1 x n system.
    std::vector<BigInt> signed_coefficients() const;

    static ShiftInvariantEq make(std::vector<BigInt> left, std::vector<BigInt> right);
};

void validate_equation(const ShiftInvariantEq& eq);

// All nonempty I with sum_{i in I} col_i = 0, in lexicographic order of the
// sorted index lists.
std::vector<std::vector<int>> zero_sum_subsets(const LinearSystem& sys,
                                               const CriteriaLimits& limits = {});

// Zero-sum subsets whose union covers every column index, greedily minimized;
// nullopt when some index lies in no zero-sum subset.
std::optional<SubsetCover> check_ip_cover(const LinearSystem& sys,
                                          const CriteriaLimits& limits = {});

// A cover that additionally separates every index pair (some subset contains
// exactly one of the two); certifies distinct-entry solutions.
std::optional<SubsetCover> check_separation(const LinearSystem& sys,
                                            const CriteriaLimits& limits = {});

// Rado's columns condition, decided by exact search with rational span
// membership; returns a certified block ordering or nullopt.
std::optional<BlockOrdering> check_columns_condition(const LinearSystem& sys,
                                                     const CriteriaLimits& limits = {});

// Turns a certified cover into a block ordering: drops subsets contained in
// the union of their predecessors, peels I_k down to its fresh indices, and
// emits the -1/0 combination witnesses that the peeling identity provides.
BlockOrdering cover_to_blocks(const LinearSystem& sys, const SubsetCover& cover);

bool verify_cover(const LinearSystem& sys, const SubsetCover& cover);
bool verify_separating_cover(const LinearSystem& sys, const SubsetCover& cover);
bool verify_block_ordering(const LinearSystem& sys, const BlockOrdering& ordering);

// True iff the coefficients sum to zero. Zero coefficients are rejected.
bool is_shift_invariant(std::span<const BigInt> coeffs);

enum class BoundTightness {
    Iff3Var,         // three variables, coprime same-side pair: exact threshold
    SufficientOnly,  // otherwise only k > bound is guaranteed
};

struct SignatureBound {
    BigInt bound;
    BoundTightness tightness;
};

// min{ max{a_1 + a_r, a_n}, max{a_r, a_{r+1} + a_n} } on the sorted sides; any
// k strictly above it guarantees distinct solutions in distinct-sums FS^k sets.
SignatureBound signature_bound(const ShiftInvariantEq& eq);

// Exact threshold for ax + by = (a+b)z with gcd(a,b) = 1: returns a + b; a
// k-IP-set is guaranteed a distinct solution iff k > a + b.
BigInt basecase_threshold(const BigInt& a, const BigInt& b);

}  // namespace finsum
