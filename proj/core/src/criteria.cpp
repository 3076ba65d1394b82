#include "finsum/criteria.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace finsum {

LinearSystem LinearSystem::single_equation(std::vector<BigInt> coeffs) {
    LinearSystem sys;
    sys.rows = 1;
    sys.cols = static_cast<int>(coeffs.size());
    sys.entries = std::move(coeffs);
    return sys;
}

void validate_system(const LinearSystem& sys, const CriteriaLimits& limits) {
    if (sys.rows < 1 || sys.cols < 1)
        throw Error("invalid-system", "system needs at least one row and one column");
    if (sys.entries.size() != static_cast<std::size_t>(sys.rows) * static_cast<std::size_t>(sys.cols))
        throw Error("invalid-system", "entry count does not match rows*cols");
    if (sys.cols > limits.max_cols)
        throw Error("cap-exceeded", "column count exceeds the subset-enumeration cap of " +
                                        std::to_string(limits.max_cols));
    if (sys.rows > limits.max_rows)
        throw Error("cap-exceeded",
                    "row count exceeds the cap of " + std::to_string(limits.max_rows));
    for (int col = 0; col < sys.cols; ++col) {
        bool nonzero = false;
        for (int row = 0; row < sys.rows && !nonzero; ++row) nonzero = sys.at(row, col) != 0;
        if (!nonzero)
            throw Error("invalid-system", "column " + std::to_string(col + 1) + " is all zero");
    }
}

std::vector<std::vector<int>> zero_sum_subsets(const LinearSystem& sys,
                                               const CriteriaLimits& limits) {
    validate_system(sys, limits);
    const int n = sys.cols;
    const int l = sys.rows;
    std::vector<std::vector<int>> result;
    std::vector<int> chosen;
    std::vector<BigInt> sum(static_cast<std::size_t>(l), 0);
    // Pre-order DFS over sorted index lists = lexicographic output order.
    std::function<void(int)> walk = [&](int next) {
        if (!chosen.empty() &&
            std::all_of(sum.begin(), sum.end(), [](const BigInt& s) { return s == 0; }))
            result.push_back(chosen);
        for (int i = next; i < n; ++i) {
            chosen.push_back(i + 1);
            for (int row = 0; row < l; ++row) sum[static_cast<std::size_t>(row)] += sys.at(row, i);
            walk(i + 1);
            for (int row = 0; row < l; ++row) sum[static_cast<std::size_t>(row)] -= sys.at(row, i);
            chosen.pop_back();
        }
    };
    walk(0);
    return result;
}

namespace {

// Greedy minimum-coverage selection over fixed item universes; candidates are
// scanned in their given (lexicographic) order, so ties resolve to the
// lexicographically least subset independent of any parallel schedule.
std::optional<std::vector<std::vector<int>>> greedy_cover(
    const std::vector<std::vector<int>>& candidates,
    const std::vector<std::vector<int>>& items_per_candidate, int item_count) {
    std::vector<char> covered(static_cast<std::size_t>(item_count), 0);
    std::vector<char> coverable(static_cast<std::size_t>(item_count), 0);
    for (const auto& items : items_per_candidate)
        for (int item : items) coverable[static_cast<std::size_t>(item)] = 1;
    if (std::find(coverable.begin(), coverable.end(), 0) != coverable.end()) return std::nullopt;

    std::vector<std::vector<int>> picked;
    int remaining = item_count;
    while (remaining > 0) {
        int best = -1;
        int best_gain = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            int gain = 0;
            for (int item : items_per_candidate[c])
                if (!covered[static_cast<std::size_t>(item)]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(c);
            }
        }
        if (best < 0) return std::nullopt;  // unreachable once coverable passed
        picked.push_back(candidates[static_cast<std::size_t>(best)]);
        for (int item : items_per_candidate[static_cast<std::size_t>(best)]) {
            if (!covered[static_cast<std::size_t>(item)]) {
                covered[static_cast<std::size_t>(item)] = 1;
                --remaining;
            }
        }
    }
    return picked;
}

}  // namespace

std::optional<SubsetCover> check_ip_cover(const LinearSystem& sys, const CriteriaLimits& limits) {
    auto zs = zero_sum_subsets(sys, limits);
    // Criterion: every index lies in some zero-sum subset (then the family of
    // all of them covers); the returned certificate is a greedy subfamily.
    std::vector<std::vector<int>> items;
    items.reserve(zs.size());
    for (const auto& subset : zs) {
        std::vector<int> v;
        v.reserve(subset.size());
        for (int i : subset) v.push_back(i - 1);
        items.push_back(std::move(v));
    }
    auto picked = greedy_cover(zs, items, sys.cols);
    if (!picked) return std::nullopt;
    return SubsetCover{std::move(*picked)};
}

std::optional<SubsetCover> check_separation(const LinearSystem& sys,
                                            const CriteriaLimits& limits) {
    auto zs = zero_sum_subsets(sys, limits);
    const int n = sys.cols;
    // Items: the n indices plus every unordered pair; a subset covers the pair
    // (i, i') when it contains exactly one of the two.
    auto pair_item = [n](int i, int j) {  // 0-based, i < j
        return n + (i * (2 * n - i - 1)) / 2 + (j - i - 1);
    };
    int item_count = n + n * (n - 1) / 2;
    std::vector<std::vector<int>> items;
    items.reserve(zs.size());
    for (const auto& subset : zs) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int i : subset) in[static_cast<std::size_t>(i - 1)] = 1;
        std::vector<int> v;
        for (int i : subset) v.push_back(i - 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)])
                    v.push_back(pair_item(i, j));
        items.push_back(std::move(v));
    }
    auto picked = greedy_cover(zs, items, item_count);
    if (!picked) return std::nullopt;
    return SubsetCover{std::move(*picked)};
}

namespace {

std::vector<BigInt> column_sum(const LinearSystem& sys, const std::vector<int>& subset) {
    std::vector<BigInt> sum(static_cast<std::size_t>(sys.rows), 0);
    for (int i : subset)
        for (int row = 0; row < sys.rows; ++row)
            sum[static_cast<std::size_t>(row)] += sys.at(row, i - 1);
    return sum;
}

// Exact rational solve of (columns) * c = target; particular solution with
// free variables pinned to zero, or nullopt when inconsistent. Deterministic:
// pivots are scanned in row order.
std::optional<std::vector<Rational>> solve_rational(const LinearSystem& sys,
                                                    const std::vector<int>& column_ids,
                                                    const std::vector<BigInt>& target) {
    const int l = sys.rows;
    const int p = static_cast<int>(column_ids.size());
    std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(l));
    for (int row = 0; row < l; ++row) {
        auto& r = aug[static_cast<std::size_t>(row)];
        r.reserve(static_cast<std::size_t>(p) + 1);
        for (int c = 0; c < p; ++c)
            r.emplace_back(sys.at(row, column_ids[static_cast<std::size_t>(c)] - 1));
        r.emplace_back(target[static_cast<std::size_t>(row)]);
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(l), -1);
    int rank = 0;
    for (int col = 0; col < p && rank < l; ++col) {
        int pivot = -1;
        for (int row = rank; row < l; ++row)
            if (aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(aug[static_cast<std::size_t>(rank)], aug[static_cast<std::size_t>(pivot)]);
        Rational inv = aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int c = col; c <= p; ++c) {
            aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] /= inv;
            aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)].canonicalize();
        }
        for (int row = 0; row < l; ++row) {
            if (row == rank) continue;
            Rational factor = aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c <= p; ++c) {
                aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] -=
                    factor * aug[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
                aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)].canonicalize();
            }
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    for (int row = rank; row < l; ++row)
        if (aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(p)] != 0)
            return std::nullopt;
    std::vector<Rational> solution(static_cast<std::size_t>(p), Rational(0));
    for (int row = 0; row < rank; ++row)
        solution[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(row)])] =
            aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(p)];
    return solution;
}

}  // namespace

std::optional<BlockOrdering> check_columns_condition(const LinearSystem& sys,
                                                     const CriteriaLimits& limits) {
    validate_system(sys, limits);
    const int n = sys.cols;
    std::unordered_set<std::uint32_t> dead;  // remaining-masks with no completion

    BlockOrdering ordering;
    std::vector<int> placed;  // column ids in placement order

    // Enumerate nonempty subsets of `remaining` as sorted lists in lex order;
    // first completion found is the certificate.
    std::function<bool(std::uint32_t)> place = [&](std::uint32_t remaining) -> bool {
        if (remaining == 0) return true;
        if (dead.contains(remaining)) return false;
        std::vector<int> avail;
        for (int i = 0; i < n; ++i)
            if (remaining & (std::uint32_t{1} << i)) avail.push_back(i + 1);

        std::vector<int> subset;
        std::function<bool(std::size_t)> pick = [&](std::size_t next) -> bool {
            if (!subset.empty()) {
                auto sum = column_sum(sys, subset);
                std::optional<std::vector<Rational>> witness;
                if (placed.empty()) {
                    if (std::all_of(sum.begin(), sum.end(),
                                    [](const BigInt& s) { return s == 0; }))
                        witness.emplace();
                } else {
                    witness = solve_rational(sys, placed, sum);
                }
                if (witness) {
                    std::uint32_t rest = remaining;
                    for (int id : subset) rest &= ~(std::uint32_t{1} << (id - 1));
                    ordering.block_sizes.push_back(static_cast<int>(subset.size()));
                    ordering.witnesses.push_back(std::move(*witness));
                    std::size_t placed_before = placed.size();
                    for (int id : subset) placed.push_back(id);
                    if (place(rest)) return true;
                    placed.resize(placed_before);
                    ordering.block_sizes.pop_back();
                    ordering.witnesses.pop_back();
                }
            }
            for (std::size_t i = next; i < avail.size(); ++i) {
                subset.push_back(avail[i]);
                if (pick(i + 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        if (pick(0)) return true;
        dead.insert(remaining);
        return false;
    };

    std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    if (!place(all)) return std::nullopt;
    ordering.column_order = placed;
    return ordering;
}

bool verify_cover(const LinearSystem& sys, const SubsetCover& cover) {
    if (cover.subsets.empty()) return false;
    std::vector<char> covered(static_cast<std::size_t>(sys.cols), 0);
    for (const auto& subset : cover.subsets) {
        if (subset.empty()) return false;
        for (int i : subset) {
            if (i < 1 || i > sys.cols) return false;
            covered[static_cast<std::size_t>(i - 1)] = 1;
        }
        auto sum = column_sum(sys, subset);
        if (!std::all_of(sum.begin(), sum.end(), [](const BigInt& s) { return s == 0; }))
            return false;
    }
    return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

bool verify_separating_cover(const LinearSystem& sys, const SubsetCover& cover) {
    if (!verify_cover(sys, cover)) return false;
    for (int i = 1; i <= sys.cols; ++i) {
        for (int j = i + 1; j <= sys.cols; ++j) {
            bool separated = false;
            for (const auto& subset : cover.subsets) {
                bool has_i = std::find(subset.begin(), subset.end(), i) != subset.end();
                bool has_j = std::find(subset.begin(), subset.end(), j) != subset.end();
                if (has_i != has_j) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

bool verify_block_ordering(const LinearSystem& sys, const BlockOrdering& ordering) {
    const int n = sys.cols;
    if (static_cast<int>(ordering.column_order.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : ordering.column_order) {
        if (id < 1 || id > n || seen[static_cast<std::size_t>(id - 1)]) return false;
        seen[static_cast<std::size_t>(id - 1)] = 1;
    }
    int total = 0;
    for (int s : ordering.block_sizes) {
        if (s < 1) return false;
        total += s;
    }
    if (total != n) return false;
    if (ordering.witnesses.size() != ordering.block_sizes.size()) return false;

    int start = 0;
    for (std::size_t b = 0; b < ordering.block_sizes.size(); ++b) {
        int size = ordering.block_sizes[b];
        std::vector<int> block(ordering.column_order.begin() + start,
                               ordering.column_order.begin() + start + size);
        auto sum = column_sum(sys, block);
        if (b == 0) {
            if (!std::all_of(sum.begin(), sum.end(), [](const BigInt& s) { return s == 0; }))
                return false;
            if (!ordering.witnesses[b].empty()) return false;
        } else {
            // the recorded witness must reproduce the sum exactly
            if (static_cast<int>(ordering.witnesses[b].size()) != start) return false;
            for (int row = 0; row < sys.rows; ++row) {
                Rational acc(0);
                for (int j = 0; j < start; ++j) {
                    acc += ordering.witnesses[b][static_cast<std::size_t>(j)] *
                           Rational(sys.at(row, ordering.column_order[static_cast<std::size_t>(j)] - 1));
                }
                acc.canonicalize();
                if (acc != Rational(sum[static_cast<std::size_t>(row)])) return false;
            }
            // and span membership must hold when recomputed from scratch
            std::vector<int> earlier(ordering.column_order.begin(),
                                     ordering.column_order.begin() + start);
            if (!solve_rational(sys, earlier, sum)) return false;
        }
        start += size;
    }
    return true;
}

BlockOrdering cover_to_blocks(const LinearSystem& sys, const SubsetCover& cover) {
    validate_system(sys, CriteriaLimits{});
    if (!verify_cover(sys, cover))
        throw Error("uncertified-cover", "cover is not a certified zero-sum cover");

    // Drop any subset contained in the union of its kept predecessors, then
    // peel: fresh_k = I_k minus everything placed so far.
    std::vector<std::vector<int>> kept;
    std::vector<char> seen(static_cast<std::size_t>(sys.cols), 0);
    std::vector<std::vector<int>> fresh;
    for (const auto& subset : cover.subsets) {
        bool redundant = std::all_of(subset.begin(), subset.end(), [&](int i) {
            return seen[static_cast<std::size_t>(i - 1)] != 0;
        });
        if (redundant) continue;
        std::vector<int> f;
        for (int i : subset)
            if (!seen[static_cast<std::size_t>(i - 1)]) {
                f.push_back(i);
                seen[static_cast<std::size_t>(i - 1)] = 1;
            }
        std::sort(f.begin(), f.end());
        kept.push_back(subset);
        fresh.push_back(std::move(f));
    }

    BlockOrdering ordering;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
        ordering.block_sizes.push_back(static_cast<int>(fresh[b].size()));
        std::vector<Rational> witness;
        if (b > 0) {
            // sum(fresh_b) = -sum over earlier fresh sets of the columns that
            // also lie in I_b, so each earlier column gets -1 or 0.
            std::vector<char> in_b(static_cast<std::size_t>(sys.cols), 0);
            for (int i : kept[b]) in_b[static_cast<std::size_t>(i - 1)] = 1;
            for (int id : ordering.column_order)
                witness.emplace_back(in_b[static_cast<std::size_t>(id - 1)] ? -1 : 0);
        }
        ordering.witnesses.push_back(std::move(witness));
        for (int i : fresh[b]) ordering.column_order.push_back(i);
    }
    if (!verify_block_ordering(sys, ordering))
        throw Error("internal", "constructed block ordering failed verification");
    return ordering;
}

std::vector<BigInt> ShiftInvariantEq::signed_coefficients() const {
    std::vector<BigInt> coeffs;
    coeffs.reserve(left.size() + right.size());
    for (const auto& a : left) coeffs.push_back(a);
    for (const auto& a : right) coeffs.push_back(-a);
    return coeffs;
}

ShiftInvariantEq ShiftInvariantEq::make(std::vector<BigInt> left, std::vector<BigInt> right) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    ShiftInvariantEq eq{std::move(left), std::move(right)};
    validate_equation(eq);
    return eq;
}

void validate_equation(const ShiftInvariantEq& eq) {
    if (eq.left.empty() || eq.right.empty())
        throw Error("invalid-equation", "both sides need at least one coefficient");
    if (eq.vars() < 3)
        throw Error("invalid-equation",
                    "a two-variable shift-invariant equation forces x1 = x2; need >= 3 variables");
    BigInt ls = 0, rs = 0;
    BigInt prev = 0;
    for (const auto& a : eq.left) {
        if (a < 1) throw Error("invalid-equation", "coefficients must be positive");
        if (a < prev) throw Error("invalid-equation", "left side must be sorted ascending");
        prev = a;
        ls += a;
    }
    prev = 0;
    for (const auto& a : eq.right) {
        if (a < 1) throw Error("invalid-equation", "coefficients must be positive");
        if (a < prev) throw Error("invalid-equation", "right side must be sorted ascending");
        prev = a;
        rs += a;
    }
    if (ls != rs)
        throw Error("invalid-equation", "side sums differ; the equation is not shift-invariant");
}

bool is_shift_invariant(std::span<const BigInt> coeffs) {
    if (coeffs.empty()) throw Error("malformed-input", "no coefficients");
    BigInt sum = 0;
    for (const auto& a : coeffs) {
        if (a == 0) throw Error("zero-coefficient", "coefficients must be nonzero");
        sum += a;
    }
    return sum == 0;
}

SignatureBound signature_bound(const ShiftInvariantEq& eq) {
    validate_equation(eq);
    const BigInt& a1 = eq.left.front();
    const BigInt& ar = eq.left.back();
    const BigInt& ar1 = eq.right.front();
    const BigInt& an = eq.right.back();
    BigInt arm_original = std::max(BigInt(a1 + ar), an);
    BigInt arm_swapped = std::max(ar, BigInt(ar1 + an));
    SignatureBound out;
    out.bound = std::min(arm_original, arm_swapped);
    out.tightness = BoundTightness::SufficientOnly;
    if (eq.vars() == 3) {
        // three variables: the exact-threshold case ax + by = (a+b)z with
        // gcd(a, b) = 1 (the pair is whichever side has two coefficients)
        const auto& pair_side = eq.left.size() == 2 ? eq.left : eq.right;
        if (big_gcd(pair_side[0], pair_side[1]) == 1) out.tightness = BoundTightness::Iff3Var;
    }
    return out;
}

BigInt basecase_threshold(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw Error("malformed-input", "coefficients must be positive");
    if (big_gcd(a, b) != 1)
        throw Error("not-coprime", "the exact threshold is only proved for gcd(a, b) = 1");
    return a + b;
}

}  // namespace finsum
