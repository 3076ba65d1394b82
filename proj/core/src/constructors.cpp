#include "finsum/constructors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace finsum {

namespace {

bool pairwise_distinct(const std::vector<BigInt>& xs) {
    std::set<BigInt> seen(xs.begin(), xs.end());
    return seen.size() == xs.size();
}

void verify_system_identity(const LinearSystem& sys, const std::vector<BigInt>& x) {
    for (int row = 0; row < sys.rows; ++row) {
        BigInt acc = 0;
        for (int col = 0; col < sys.cols; ++col)
            acc += sys.at(row, col) * x[static_cast<std::size_t>(col)];
        if (acc != 0)
            throw Error("internal", "constructed vector does not solve the system");
    }
}

std::string system_identity_text(const LinearSystem& sys, const std::vector<BigInt>& x) {
    std::ostringstream out;
    for (int row = 0; row < sys.rows; ++row) {
        if (row > 0) out << "; ";
        bool first = true;
        for (int col = 0; col < sys.cols; ++col) {
            const BigInt& a = sys.at(row, col);
            if (a == 0) continue;
            if (!first) out << (a > 0 ? " + " : " - ");
            else if (a < 0) out << "-";
            first = false;
            out << to_decimal(abs(a)) << "*" << to_decimal(x[static_cast<std::size_t>(col)]);
        }
        out << " = 0";
    }
    return out.str();
}

void verify_equation_identity(const ShiftInvariantEq& eq, const std::vector<BigInt>& x) {
    auto coeffs = eq.signed_coefficients();
    BigInt acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * x[i];
    if (acc != 0) throw Error("internal", "constructed vector does not solve the equation");
}

std::string equation_identity_text(const ShiftInvariantEq& eq, const std::vector<BigInt>& x) {
    std::ostringstream out;
    std::size_t r = eq.left.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (i > 0) out << " + ";
        out << to_decimal(eq.left[i]) << "*" << to_decimal(x[i]);
    }
    out << " = ";
    for (std::size_t i = 0; i < eq.right.size(); ++i) {
        if (i > 0) out << " + ";
        out << to_decimal(eq.right[i]) << "*" << to_decimal(x[r + i]);
    }
    return out.str();
}

}  // namespace

SolutionVector solution_from_cover(const LinearSystem& sys, const SubsetCover& cover,
                                   std::span<const BigInt> ys) {
    if (!verify_cover(sys, cover))
        throw Error("uncertified-cover", "cover is not a certified zero-sum cover");
    if (ys.size() != cover.subsets.size())
        throw Error("length-mismatch", "need exactly one y per cover subset");
    for (const auto& y : ys)
        if (y < 1) throw Error("malformed-input", "ys must be positive");

    std::vector<BigInt> x(static_cast<std::size_t>(sys.cols), 0);
    for (std::size_t j = 0; j < cover.subsets.size(); ++j)
        for (int i : cover.subsets[j]) x[static_cast<std::size_t>(i - 1)] += ys[j];
    for (const auto& xi : x)
        if (xi < 1) throw Error("internal", "cover left an entry uncovered");
    verify_system_identity(sys, x);

    SolutionVector sol;
    sol.distinct = pairwise_distinct(x);
    sol.identity = system_identity_text(sys, x);
    sol.entries = std::move(x);
    sol.provenance = "cover";
    return sol;
}

SolutionVector basecase_solution(const BigInt& a, const BigInt& b, const BigInt& y1,
                                 const BigInt& y2) {
    if (a < 1 || b < 1) throw Error("malformed-input", "a and b must be positive");
    if (big_gcd(a, b) != 1) throw Error("not-coprime", "requires gcd(a, b) = 1");
    if (y1 < 1 || y2 < 1) throw Error("malformed-input", "y1 and y2 must be positive");

    std::vector<BigInt> x{y1, y1 + (a + b) * y2, y1 + b * y2};
    auto sys = LinearSystem::single_equation({a, b, -(a + b)});
    verify_system_identity(sys, x);

    SolutionVector sol;
    sol.distinct = pairwise_distinct(x);
    if (!sol.distinct) throw Error("internal", "basecase entries collided");
    std::ostringstream identity;
    identity << to_decimal(a) << "*" << to_decimal(x[0]) << " + " << to_decimal(b) << "*"
             << to_decimal(x[1]) << " = " << to_decimal(a + b) << "*" << to_decimal(x[2]);
    sol.identity = identity.str();
    sol.entries = std::move(x);
    sol.provenance = "basecase";
    return sol;
}

EpsilonMatrix epsilon_matrix(const ShiftInvariantEq& eq) {
    validate_equation(eq);
    const int n = eq.vars();
    const int r = static_cast<int>(eq.left.size());
    std::vector<BigInt> coeff;  // unsigned coefficient per position, 0-based
    coeff.reserve(static_cast<std::size_t>(n));
    for (const auto& a : eq.left) coeff.push_back(a);
    for (const auto& a : eq.right) coeff.push_back(a);
    auto side_of = [&](int pos) { return pos < r ? 0 : 1; };

    // One vector per non-pivot position j. Same side as the pivot: a_j
    // everywhere except 0 at the pivot and a_pivot + a_j at j. Opposite side:
    // a_j at the pivot, a_pivot at j, zero elsewhere.
    auto build_family = [&](int pivot) {
        std::vector<std::vector<BigInt>> family;
        for (int j = 0; j < n; ++j) {
            if (j == pivot) continue;
            std::vector<BigInt> vec(static_cast<std::size_t>(n), 0);
            if (side_of(j) == side_of(pivot)) {
                for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i)] = coeff[static_cast<std::size_t>(j)];
                vec[static_cast<std::size_t>(pivot)] = 0;
                vec[static_cast<std::size_t>(j)] =
                    coeff[static_cast<std::size_t>(pivot)] + coeff[static_cast<std::size_t>(j)];
            } else {
                vec[static_cast<std::size_t>(pivot)] = coeff[static_cast<std::size_t>(j)];
                vec[static_cast<std::size_t>(j)] = coeff[static_cast<std::size_t>(pivot)];
            }
            verify_equation_identity(eq, vec);
            family.push_back(std::move(vec));
        }
        return family;
    };
    auto family_max = [](const std::vector<std::vector<BigInt>>& family) {
        BigInt mx = 0;
        for (const auto& vec : family)
            for (const auto& e : vec) mx = std::max(mx, e);
        return mx;
    };

    auto original = build_family(0);      // pivot: smallest left coefficient
    auto swapped = build_family(r);       // pivot: smallest right coefficient
    BigInt max_original = family_max(original);
    BigInt max_swapped = family_max(swapped);

    EpsilonMatrix em;
    if (max_swapped < max_original) {
        em.side = EpsilonSide::Swapped;
        em.vectors = std::move(swapped);
        em.max_entry = max_swapped;
        em.audit_other = std::move(original);
        em.audit_other_max = max_original;
    } else {
        em.side = EpsilonSide::Original;
        em.vectors = std::move(original);
        em.max_entry = max_original;
        em.audit_other = std::move(swapped);
        em.audit_other_max = max_swapped;
    }
    return em;
}

SolutionVector solution_from_epsilon(const ShiftInvariantEq& eq, const EpsilonMatrix& em,
                                     std::span<const BigInt> ys) {
    validate_equation(eq);
    const int n = eq.vars();
    if (em.vectors.size() != static_cast<std::size_t>(n - 1))
        throw Error("length-mismatch", "epsilon matrix needs n-1 vectors");
    if (ys.size() != em.vectors.size())
        throw Error("length-mismatch", "need exactly one y per epsilon vector");
    for (const auto& y : ys)
        if (y < 1) throw Error("malformed-input", "ys must be positive");

    std::vector<BigInt> x(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < em.vectors.size(); ++j) {
        if (em.vectors[j].size() != static_cast<std::size_t>(n))
            throw Error("length-mismatch", "epsilon vector has wrong dimension");
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] += em.vectors[j][static_cast<std::size_t>(i)] * ys[j];
    }
    for (const auto& xi : x)
        if (xi < 1) throw Error("internal", "epsilon combination left a nonpositive entry");
    verify_equation_identity(eq, x);

    SolutionVector sol;
    sol.distinct = pairwise_distinct(x);
    sol.identity = equation_identity_text(eq, x);
    sol.entries = std::move(x);
    sol.provenance = em.side == EpsilonSide::Original ? "epsilon-original" : "epsilon-swapped";
    return sol;
}

SolutionVector example19_solution(const BigInt& y1, const BigInt& y2) {
    if (y1 < 1 || y2 < 1) throw Error("malformed-input", "y1 and y2 must be positive");
    // digit identity on y1: 3*1 + 5*7 + 11*0 = 19*2
    std::vector<BigInt> x{y2 + y1, y2 + 7 * y1, y2, y2 + 2 * y1};
    auto eq = ShiftInvariantEq::make({3, 5, 11}, {19});
    verify_equation_identity(eq, x);

    SolutionVector sol;
    sol.distinct = pairwise_distinct(x);
    sol.identity = equation_identity_text(eq, x);
    sol.entries = std::move(x);
    sol.provenance = "example19";
    return sol;
}

SolutionVector shift_solution(const SolutionVector& sol, const BigInt& m,
                              std::span<const BigInt> coeffs) {
    if (m < 0) throw Error("malformed-input", "shift must be non-negative");
    if (!is_shift_invariant(coeffs))
        throw Error("not-shift-invariant", "coefficients do not sum to zero");
    if (coeffs.size() != sol.entries.size())
        throw Error("length-mismatch", "coefficient count must match solution length");
    BigInt acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * sol.entries[i];
    if (acc != 0) throw Error("malformed-input", "input vector does not solve the equation");

    SolutionVector shifted = sol;
    for (auto& xi : shifted.entries) xi += m;
    acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * shifted.entries[i];
    if (acc != 0) throw Error("internal", "shifted vector stopped solving the equation");
    shifted.provenance = sol.provenance + "+shift";
    std::ostringstream identity;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const BigInt& a = coeffs[i];
        if (!first) identity << (a > 0 ? " + " : " - ");
        else if (a < 0) identity << "-";
        first = false;
        identity << to_decimal(abs(a)) << "*" << to_decimal(shifted.entries[i]);
    }
    identity << " = 0";
    shifted.identity = identity.str();
    return shifted;
}

}  // namespace finsum
