#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finsum/criteria.hpp"
#include "finsum/fs_core.hpp"

namespace finsum {

struct SearchOptions {
    std::uint64_t budget = 100'000'000;  // node expansions
    int workers = 1;
    std::uint64_t seed = 1729;           // echoed into verdicts for reproducibility
};

// Finite ground set: an explicit ascending value list (optionally remembering
// the FsSpec it came from) or the word cube [0,t)^n.
class GroundSet {
public:
    enum class Kind { Values, Cube };

    static GroundSet from_values(std::vector<BigInt> values);
    static GroundSet interval(const BigInt& lo, const BigInt& hi);
    static GroundSet from_fs(const FsSpec& spec, const EnumLimits& limits = {});
    static GroundSet cube(int t, int n);

    Kind kind() const { return kind_; }
    std::size_t size() const;

    const std::vector<BigInt>& values() const { return values_; }
    bool has_value(const BigInt& v) const;
    int index_of(const BigInt& v) const;  // -1 if absent

    int cube_t() const { return cube_t_; }
    int cube_n() const { return cube_n_; }
    std::vector<int> cube_word(std::size_t index) const;    // lex rank -> digits
    std::size_t cube_index(std::span<const int> word) const;

    const std::optional<FsSpec>& fs_origin() const { return fs_origin_; }

private:
    Kind kind_ = Kind::Values;
    std::vector<BigInt> values_;
    int cube_t_ = 0;
    int cube_n_ = 0;
    std::optional<FsSpec> fs_origin_;
};

struct Target {
    enum class Kind { Ap, Brauer, Line, Subspace, Equation, ShiftedFs };

    Kind kind = Kind::Ap;
    int length = 3;                       // Ap / Brauer progression length
    BigInt brauer_s = 1;                  // Brauer: s*d joins the progression
    int dim = 1;                          // Subspace variable count
    std::optional<LinearSystem> system;   // Equation
    bool distinct = false;                // Equation: require pairwise distinct
    int fs_k = 2;                         // ShiftedFs digit bound (must match spec)
    int fs_t = 1;                         // ShiftedFs generator count

    static Target ap(int len);
    static Target brauer(int len, const BigInt& s);
    static Target line();
    static Target subspace(int dim);
    static Target equation(LinearSystem sys, bool distinct);
    static Target shifted_fs(int k, int t);
};

// Color per ground-set element, colors 0..r-1. Canonical form: colors make
// their first appearances in increasing order.
struct Coloring {
    std::vector<int> colors;
    int r = 1;
};

Coloring canonicalize_colors(const Coloring& c);

struct ShiftedFsWitness {
    BigInt m;                      // in FS union {0}
    std::vector<BigInt> ys;        // strictly increasing disjoint subset sums
    std::vector<BigInt> elements;  // m + FS^k((ys)), the monochromatic part
    int color = 0;
};

// One monochromatic instance, with the structure that produced it.
struct MonoWitness {
    std::string kind;
    int color = 0;
    std::vector<BigInt> elements;             // values (Values grounds)
    std::vector<std::vector<int>> cube_words; // points (Cube grounds)
    std::optional<ArithProgression> ap;
    std::optional<BigInt> brauer_sd;
    std::optional<ParametricWord> word;
    std::optional<std::vector<BigInt>> solution;
    std::optional<ShiftedFsWitness> shifted;
};

struct Verdict {
    enum class Status { Holds, Fails, Inconclusive };

    Status status = Status::Inconclusive;
    std::optional<Coloring> counterexample;  // present iff Fails
    std::uint64_t explored = 0;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;

    bool holds() const { return status == Status::Holds; }
};

// First monochromatic target instance in the target's canonical order, or
// nullopt. Straight-line enumeration, independent of the universal search;
// it doubles as the verifier for counterexample colorings.
std::optional<MonoWitness> find_mono(const GroundSet& ground, const Coloring& coloring,
                                     const Target& target);

// Does every r-coloring of the ground set contain a monochromatic target
// instance? Exhaustive DFS over canonical colorings with partial-instance
// bookkeeping. Counterexamples are re-verified with find_mono before return.
// Deterministic for fixed inputs regardless of worker count.
Verdict forall_colorings(const GroundSet& ground, int r, const Target& target,
                         const SearchOptions& options = {});

struct NumberResult {
    std::optional<int> value;                // least n that holds, if <= cap
    std::optional<int> counterexample_n;     // value-1 when a coloring exists there
    std::optional<Coloring> counterexample;  // verified coloring for counterexample_n
    bool budget_hit = false;
    std::uint64_t explored = 0;
};

NumberResult vdw_number(int r, int k, int cap, const SearchOptions& options = {});
NumberResult brauer_number(int r, int k, const BigInt& s, int cap,
                           const SearchOptions& options = {});
NumberResult hj_number(int r, int t, int cap, const SearchOptions& options = {});

// Structured search from the extended-Hales-Jewett proof shape: disjoint
// nonempty generator index sets give ys, fixed digits on the rest give m, and
// m + FS^k((ys)) must be monochromatic (m itself is exempt). The coloring is
// positional over fs_enumerate(spec).
std::optional<ShiftedFsWitness> find_shifted_fs(const FsSpec& spec, const Coloring& coloring,
                                                int t, const EnumLimits& limits = {});

struct PseudoNeatResult {
    Verdict::Status status = Verdict::Status::Inconclusive;
    BigInt base;                                 // B = k*n*max|a_i| + 1
    std::optional<std::vector<BigInt>> solution; // distinct solution found
    std::optional<std::vector<std::vector<BigInt>>> digit_matrix;  // n x t
    std::uint64_t explored = 0;
};

// Decides whether FS^k((B^j)_{j=1..t}) contains a distinct solution of the
// equation. When it does, the per-column digit identities transfer the
// solution to every distinct-sums FS^k spec of length t; the digit matrix is
// extracted and re-verified column by column.
PseudoNeatResult check_pseudo_neat(const ShiftInvariantEq& eq, int k, int t,
                                   const SearchOptions& options = {});

}  // namespace finsum
