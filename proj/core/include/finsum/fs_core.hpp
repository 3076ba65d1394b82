#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finsum/bigint.hpp"
#include "finsum/error.hpp"

namespace finsum {

// Per-call limit on word enumeration; k^n above the cap raises
// enumeration-too-large instead of silently grinding.
struct EnumLimits {
    std::uint64_t max_words = std::uint64_t{1} << 22;
};

// A finite truncation of a k-IP generating system: sums
//   shift + e_1*x_1 + ... + e_n*x_n        with digits e_i in [0, k).
struct FsSpec {
    std::vector<BigInt> generators;  // strictly increasing, all >= 1
    int k = 2;                       // digit bound, >= 2
    BigInt shift = 0;                // >= 0

    int size() const { return static_cast<int>(generators.size()); }
};

void validate_spec(const FsSpec& spec);

// Digit vector (e_1, ..., e_n), each in [0, k). The all-zero word is a valid
// object (it names the bare shift) but is never an FS element.
struct EpsilonWord {
    std::vector<int> digits;
    int k = 2;

    bool is_zero() const;
    bool operator==(const EpsilonWord&) const = default;
};

// Word over the alphabet [0, k) plus variables v_1..v_d; cell values >= 0 are
// digits, cell value -j is variable v_j. Every declared variable must occur.
struct ParametricWord {
    std::vector<int> cells;
    int k = 2;
    int dim = 1;

    bool operator==(const ParametricWord&) const = default;
};

void validate_word(const ParametricWord& word);

// Substitutes value_for_var[j-1] for v_j.
EpsilonWord substitute(const ParametricWord& word, std::span<const int> value_for_var);

struct ArithProgression {
    BigInt a;      // first term
    BigInt d;      // common difference, >= 1
    int len = 2;   // >= 2

    std::vector<BigInt> terms() const;
    bool operator==(const ArithProgression&) const = default;
};

// line_to_ap keeps the variable-value-0 endpoint even when it is 0 (outside
// the FS set proper); the flag records that instead of dropping the term.
struct LineAp {
    ArithProgression ap;
    bool includes_zero = false;
};

// All sums {shift + sum e_i x_i : e nonzero}, ascending, deduplicated.
std::vector<BigInt> fs_enumerate(const FsSpec& spec, const EnumLimits& limits = {});

// True iff e -> sum e_i x_i is injective on the full digit cube [0,k)^n.
bool has_distinct_sums(const FsSpec& spec, const EnumLimits& limits = {});

// Recursive minimal sparse system: x_1 = seed, x_{j+1} = 2*max(FS) + 1.
// Output always has distinct sums.
FsSpec sparse_generators(int k, int n, const BigInt& seed_value = 1);

enum class IpBarDigits {
    Literal,  // e_i in [0, i), so e_1 is forced to 0
    Widened,  // e_i in [0, i+1)
};

// Sums with index-graded digits; unlike fs_enumerate the zero word stays in.
std::vector<BigInt> ip_bar_enumerate(std::span<const BigInt> generators, int n,
                                     IpBarDigits digits = IpBarDigits::Literal);

BigInt word_to_sum(const EpsilonWord& word, const FsSpec& spec);

// Unique preimage of s under word_to_sum. Requires distinct sums
// (ambiguous-representation otherwise); s outside the sum set is not-a-member.
EpsilonWord sum_to_word(const BigInt& s, const FsSpec& spec, const EnumLimits& limits = {});

// Unique signed digits (g_1, ..., g_m) with x = sum g_i B^i and |g_i| <= bound,
// or nullopt when x has no such representation. Requires 2*bound < B, which is
// what makes the representation unique.
std::optional<std::vector<BigInt>> signed_digit_decompose(const BigInt& x, const BigInt& base,
                                                          int m, const BigInt& bound);

LineAp line_to_ap(const ParametricWord& word, const FsSpec& spec);

// Inverse direction: the parametric word whose line has exactly the AP's term
// set, if one exists. Terms outside the sum set raise term-not-in-set.
std::optional<ParametricWord> ap_to_line(const ArithProgression& ap, const FsSpec& spec,
                                         const EnumLimits& limits = {});

class FsTable;
// Same, against a prebuilt table (for bulk scans).
std::optional<ParametricWord> ap_to_line(const ArithProgression& ap, const FsTable& table);

struct MaxApResult {
    int length = 0;
    std::optional<ArithProgression> witness;  // absent when length < 2
};

// Longest arithmetic progression (d >= 1) inside a sorted distinct list.
MaxApResult max_ap_length(std::span<const BigInt> values);

// Precomputed word<->sum table for one spec; handy for bulk conversions.
// Only valid for specs with distinct sums.
class FsTable {
public:
    FsTable(const FsSpec& spec, const EnumLimits& limits = {});

    const FsSpec& spec() const { return spec_; }
    bool distinct_sums() const { return distinct_; }

    // nullopt when s is not shift + (a sum of the cube), zero word included.
    std::optional<EpsilonWord> lookup(const BigInt& s) const;
    bool contains(const BigInt& s) const;  // membership incl. the shift word

    const std::vector<BigInt>& sums() const { return sums_; }  // ascending, incl. shift

private:
    FsSpec spec_;
    bool distinct_ = false;
    std::vector<BigInt> sums_;               // ascending
    std::vector<std::vector<int>> words_;    // parallel to sums_
};

}  // namespace finsum
