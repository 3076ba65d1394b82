#include <doctest.h>

#include <random>

#include "finsum/constructors.hpp"
#include "finsum/criteria.hpp"
#include "oracles.hpp"

using namespace finsum;

namespace {

LinearSystem row(std::initializer_list<long> coeffs) {
    std::vector<BigInt> v;
    for (long c : coeffs) v.emplace_back(c);
    return LinearSystem::single_equation(std::move(v));
}

// Random system with no all-zero column; entries in [-5, 5].
LinearSystem random_system(std::mt19937_64& rng, int max_rows = 3, int max_cols = 6) {
    while (true) {
        LinearSystem sys;
        sys.rows = 1 + static_cast<int>(rng() % max_rows);
        sys.cols = 1 + static_cast<int>(rng() % max_cols);
        sys.entries.resize(static_cast<std::size_t>(sys.rows * sys.cols));
        for (auto& e : sys.entries) e = static_cast<long>(rng() % 11) - 5;
        bool ok = true;
        for (int col = 0; col < sys.cols && ok; ++col) {
            bool nonzero = false;
            for (int r = 0; r < sys.rows; ++r) nonzero = nonzero || sys.at(r, col) != 0;
            ok = nonzero;
        }
        if (ok) return sys;
    }
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("zero_sum_subsets in lexicographic order") {
    CHECK(zero_sum_subsets(row({1, 1, -1})) ==
          std::vector<std::vector<int>>{{1, 3}, {2, 3}});
    CHECK(zero_sum_subsets(row({2, -1})).empty());
    CHECK(zero_sum_subsets(row({1, -1})) == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("zero_sum_subsets agrees with the bitmask oracle") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 200; ++round) {
        LinearSystem sys = random_system(rng, 3, 10);
        CHECK(zero_sum_subsets(sys) == oracle::zero_sum_subsets(sys));
    }
}

TEST_CASE("zero_sum_subsets cap") {
    LinearSystem sys;
    sys.rows = 1;
    sys.cols = 23;
    sys.entries.assign(23, BigInt(1));
    CHECK_THROWS_WITH_AS(zero_sum_subsets(sys), doctest::Contains("cap"), Error);
}

TEST_CASE("check_ip_cover") {
    auto schur = check_ip_cover(row({1, 1, -1}));
    REQUIRE(schur.has_value());
    CHECK(schur->subsets == std::vector<std::vector<int>>{{1, 3}, {2, 3}});
    CHECK(verify_cover(row({1, 1, -1}), *schur));

    auto four = check_ip_cover(row({1, 2, 3, -6}));
    REQUIRE(four.has_value());
    CHECK(four->subsets == std::vector<std::vector<int>>{{1, 2, 3, 4}});

    CHECK_FALSE(check_ip_cover(row({2, -1})).has_value());
}

TEST_CASE("check_separation") {
    auto schur = check_separation(row({1, 1, -1}));
    REQUIRE(schur.has_value());
    CHECK(schur->subsets == std::vector<std::vector<int>>{{1, 3}, {2, 3}});
    CHECK(verify_separating_cover(row({1, 1, -1}), *schur));

    // x1 = x2 is forced, so no separating cover exists
    CHECK_FALSE(check_separation(row({1, -1})).has_value());

    auto five = check_separation(row({1, 1, -1, 1, -1}));
    REQUIRE(five.has_value());
    CHECK(verify_separating_cover(row({1, 1, -1, 1, -1}), *five));
}

TEST_CASE("separating covers are covers") {
    std::mt19937_64 rng(103);
    for (int round = 0; round < 200; ++round) {
        LinearSystem sys = random_system(rng);
        if (check_separation(sys).has_value()) CHECK(check_ip_cover(sys).has_value());
    }
}

TEST_CASE("check_columns_condition") {
    auto schur = check_columns_condition(row({1, 1, -1}));
    REQUIRE(schur.has_value());
    CHECK(schur->block_sizes == std::vector<int>{2, 1});
    CHECK(schur->column_order == std::vector<int>{1, 3, 2});
    CHECK(verify_block_ordering(row({1, 1, -1}), *schur));

    CHECK_FALSE(check_columns_condition(row({2, -1})).has_value());

    auto pair = check_columns_condition(row({1, -1}));
    REQUIRE(pair.has_value());
    CHECK(pair->block_sizes == std::vector<int>{2});
    CHECK(verify_block_ordering(row({1, -1}), *pair));
}

TEST_CASE("ip cover implies the columns condition on random systems") {
    std::mt19937_64 rng(107);
    int with_cover = 0;
    for (int round = 0; round < 1500; ++round) {
        LinearSystem sys = random_system(rng);
        auto cover = check_ip_cover(sys);
        if (!cover) continue;
        ++with_cover;
        auto blocks = check_columns_condition(sys);
        REQUIRE(blocks.has_value());
        CHECK(verify_block_ordering(sys, *blocks));
    }
    CHECK(with_cover > 20);
}

TEST_CASE("cover_to_blocks follows the peeling construction") {
    LinearSystem schur = row({1, 1, -1});
    SubsetCover cover{{{1, 3}, {2, 3}}};
    auto blocks = cover_to_blocks(schur, cover);
    CHECK(blocks.block_sizes == std::vector<int>{2, 1});
    CHECK(blocks.column_order == std::vector<int>{1, 3, 2});
    REQUIRE(blocks.witnesses.size() == 2);
    CHECK(blocks.witnesses[0].empty());
    // second block sum = -a_3: coefficient 0 on column 1, -1 on column 3
    CHECK(blocks.witnesses[1] == std::vector<Rational>{Rational(0), Rational(-1)});
    CHECK(verify_block_ordering(schur, blocks));

    auto single = cover_to_blocks(row({1, 2, 3, -6}), SubsetCover{{{1, 2, 3, 4}}});
    CHECK(single.block_sizes == std::vector<int>{4});
    CHECK(verify_block_ordering(row({1, 2, 3, -6}), single));

    // duplicated subsets are dropped as redundant
    auto dup = cover_to_blocks(row({1, -1}), SubsetCover{{{1, 2}, {1, 2}}});
    CHECK(dup.block_sizes == std::vector<int>{2});

    CHECK_THROWS_WITH_AS(cover_to_blocks(schur, SubsetCover{{{1, 2}}}),
                         doctest::Contains("certified"), Error);
}

TEST_CASE("cover_to_blocks passes the verifier on random covered systems") {
    std::mt19937_64 rng(109);
    int covered = 0;
    while (covered < 100) {
        LinearSystem sys = random_system(rng);
        auto cover = check_ip_cover(sys);
        if (!cover) continue;
        ++covered;
        CHECK(verify_block_ordering(sys, cover_to_blocks(sys, *cover)));
    }
}

TEST_CASE("cross-module: covers produce verified solutions") {
    std::mt19937_64 rng(113);
    int covered = 0;
    while (covered < 50) {
        LinearSystem sys = random_system(rng);
        auto cover = check_ip_cover(sys);
        if (!cover) continue;
        ++covered;
        std::vector<BigInt> ys;
        for (std::size_t j = 0; j < cover->subsets.size(); ++j)
            ys.emplace_back(1 + static_cast<long>(rng() % 50));
        auto sol = solution_from_cover(sys, *cover, ys);  // verifies A*x = 0 internally
        CHECK(sol.entries.size() == static_cast<std::size_t>(sys.cols));
    }
}

TEST_CASE("is_shift_invariant") {
    CHECK(is_shift_invariant(big({1, 1, -2})));
    CHECK(is_shift_invariant(big({3, 5, 11, -19})));
    CHECK_FALSE(is_shift_invariant(big({2, -1})));
    CHECK_THROWS_AS(is_shift_invariant(big({1, 0, -1})), Error);
}

TEST_CASE("signature_bound evaluates the min-max formula") {
    auto b1 = signature_bound(ShiftInvariantEq::make(big({1, 1}), big({2})));
    CHECK(b1.bound == 2);
    CHECK(b1.tightness == BoundTightness::Iff3Var);

    auto b2 = signature_bound(ShiftInvariantEq::make(big({3, 5, 11}), big({19})));
    CHECK(b2.bound == 19);
    CHECK(b2.tightness == BoundTightness::SufficientOnly);

    auto b3 = signature_bound(ShiftInvariantEq::make(big({1, 2}), big({1, 2})));
    CHECK(b3.bound == 3);

    auto b4 = signature_bound(ShiftInvariantEq::make(big({2, 2}), big({4})));
    CHECK(b4.tightness == BoundTightness::SufficientOnly);  // gcd(2,2) = 2
}

TEST_CASE("signature_bound is symmetric in the two sides") {
    std::mt19937_64 rng(127);
    int built = 0;
    while (built < 200) {
        int r = 1 + static_cast<int>(rng() % 3);
        int s = 1 + static_cast<int>(rng() % 3);
        if (r + s < 3) continue;
        std::vector<BigInt> left, right;
        BigInt ls = 0;
        for (int i = 0; i < r; ++i) {
            long a = 1 + static_cast<long>(rng() % 6);
            left.emplace_back(a);
            ls += a;
        }
        BigInt rs = 0;
        for (int i = 0; i + 1 < s; ++i) {
            long a = 1 + static_cast<long>(rng() % 6);
            right.emplace_back(a);
            rs += a;
        }
        if (ls <= rs) continue;
        right.push_back(ls - rs);
        ShiftInvariantEq eq = ShiftInvariantEq::make(left, right);
        ShiftInvariantEq swapped = ShiftInvariantEq::make(right, left);
        CHECK(signature_bound(eq).bound == signature_bound(swapped).bound);
        ++built;
    }
}

TEST_CASE("shift-invariant equation validation") {
    CHECK_THROWS_AS(ShiftInvariantEq::make(big({1}), big({1})), Error);     // two variables
    CHECK_THROWS_AS(ShiftInvariantEq::make(big({1, 2}), big({2})), Error);  // unbalanced
    CHECK_THROWS_AS(ShiftInvariantEq::make(big({0, 2}), big({2})), Error);  // nonpositive
}

TEST_CASE("basecase_threshold") {
    CHECK(basecase_threshold(1, 1) == 2);
    CHECK(basecase_threshold(2, 3) == 5);
    CHECK_THROWS_WITH_AS(basecase_threshold(2, 4), doctest::Contains("gcd"), Error);
}
