#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "chenranks/alexander.hpp"
#include "chenranks/errors.hpp"
#include "chenranks/examples.hpp"
#include "oracles.hpp"

using namespace chenranks;
using exactla::RankMode;
using exactla::RankStrategy;

namespace {

std::uint64_t mask_of(std::initializer_list<int> idx) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << i;
    return m;
}

std::vector<RankStrategy> all_strategies() {
    return {{RankMode::exact, 0, std::nullopt},
            {RankMode::modular, 17, std::nullopt},
            {RankMode::verify, 99, std::nullopt}};
}

std::vector<Int> hilbert_range(const LineCombinatorics& lc, int kmax, const RankStrategy& s) {
    AlexanderInvariant inv(lc);
    std::vector<Int> out;
    for (int k = 2; k <= kmax; ++k) out.push_back(inv.hilbert(k, s));
    return out;
}

} // namespace

TEST_CASE("monomial bases of the polynomial ring") {
    MonomialBasis b0(4, 0);
    CHECK(b0.size() == 1);
    CHECK(b0.codes[0] == 0);

    MonomialBasis b2(3, 2);
    CHECK(b2.size() == 6); // x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
    for (int i = 0; i < b2.size(); ++i) CHECK(b2.index(b2.codes[i]) == i);

    // multiplying every degree-2 monomial by every variable lands in degree 3
    MonomialBasis b3(3, 3);
    CHECK(b3.size() == 10);
    for (std::uint64_t code : b2.codes)
        for (int v = 0; v < 3; ++v) CHECK_NOTHROW(b3.index(MonomialBasis::multiply(code, 2, v)));

    // x0 * x1x2 = x0x1x2 regardless of insertion point
    std::uint64_t x1x2 = MonomialBasis::encode({1, 2});
    std::uint64_t x0x1 = MonomialBasis::encode({0, 1});
    CHECK(MonomialBasis::multiply(x1x2, 2, 0) == MonomialBasis::multiply(x0x1, 2, 2));
    CHECK(MonomialBasis::decode(MonomialBasis::multiply(x1x2, 2, 0), 3) ==
          std::vector<int>{0, 1, 2});

    CHECK(MonomialBasis(5, 3).size() == binomial(7, 3));
    CHECK_THROWS_AS(MonomialBasis(17, 2), ResourceError);
    CHECK_THROWS_AS(b2.index(MonomialBasis::encode({2, 2, 2})), InputError);
}

TEST_CASE("nbc basis of A_2") {
    auto braid = examples::braid_lc();
    auto pairs = nbc_basis_a2(braid);
    CHECK(pairs.size() == 11); // four triple points contribute 2, three doubles 1

    // every pair drops the minimum of its flat
    for (const auto& p : pairs) {
        CHECK(p.index != p.flat[0]);
        CHECK(std::find(p.flat.begin(), p.flat.end(), p.index) != p.flat.end());
    }

    CHECK(nbc_basis_a2(examples::pencil_lc(3)).size() == 2);
    CHECK(nbc_basis_a2(examples::ceva3_lc()).size() == 24);
    // matches the Orlik-Solomon dimension in degree 2
    CHECK(OsAlgebra(matroid_from_line_combinatorics(braid)).a_dim(2) == 11);
}

TEST_CASE("alpha2 expansion") {
    ExteriorElement a = alpha2({{0, 1, 2}, 1});
    // e1 ^ (e0+e1+e2) = -e01 + e12
    REQUIRE(a.size() == 2);
    CHECK(a[0].first == mask_of({0, 1}));
    CHECK(a[0].second == -1);
    CHECK(a[1].first == mask_of({1, 2}));
    CHECK(a[1].second == 1);

    ExteriorElement d = alpha2({{0, 5}, 5});
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == mask_of({0, 5}));
    CHECK(d[0].second == -1);

    ExteriorElement t = alpha2({{0, 3, 4}, 4});
    REQUIRE(t.size() == 2);
    CHECK(t[0].first == mask_of({0, 4}));
    CHECK(t[1].first == mask_of({3, 4}));
}

TEST_CASE("presentation shapes") {
    auto braid = build_delta_lin(examples::braid_lc());
    CHECK(braid.n == 6);
    CHECK(braid.generators == 15);
    CHECK(braid.e2_monomials.size() == 15);
    CHECK(braid.constant_columns.size() == 11);
    CHECK(braid.linear_columns.size() == 20);
    CHECK(std::is_sorted(braid.e2_monomials.begin(), braid.e2_monomials.end()));

    // each linear column touches the three facets of a degree-3 monomial with
    // signs +,-,+ in ascending variable order
    for (const auto& col : braid.linear_columns) {
        REQUIRE(col.size() == 3);
        CHECK(col[0].var < col[1].var);
        CHECK(col[1].var < col[2].var);
        CHECK(col[0].coeff == 1);
        CHECK(col[1].coeff == -1);
        CHECK(col[2].coeff == 1);
        std::uint64_t support = 0;
        for (const auto& t : col) support |= braid.e2_monomials[static_cast<std::size_t>(t.row)];
        CHECK(std::popcount(support) == 3);
        for (const auto& t : col)
            CHECK((support & (std::uint64_t{1} << t.var)));
    }

    auto pencil = build_delta_lin(examples::pencil_lc(3));
    CHECK(pencil.generators == 3);
    CHECK(pencil.constant_columns.size() == 2);
    CHECK(pencil.linear_columns.size() == 1);
}

TEST_CASE("constant block has full column rank and the expected quotient") {
    AlexanderInvariant braid(examples::braid_lc());
    CHECK(braid.generators() == 15);
    CHECK(braid.dim_a2() == 11);
    CHECK(braid.quotient_dim() == 4);

    AlexanderInvariant ceva(examples::ceva3_lc());
    CHECK(ceva.generators() == 36);
    CHECK(ceva.dim_a2() == 24);
    CHECK(ceva.quotient_dim() == 12);

    // independent rank check of the alpha2 columns as a dense matrix
    auto pres = braid.presentation();
    std::vector<std::vector<Rational>> dense(
        pres.constant_columns.size(), std::vector<Rational>(static_cast<std::size_t>(pres.generators), Rational(0)));
    for (std::size_t j = 0; j < pres.constant_columns.size(); ++j)
        for (const auto& [row, val] : pres.constant_columns[j])
            dense[j][static_cast<std::size_t>(row)] = val;
    CHECK(oracle::rank_dense(dense) == 11);
}

TEST_CASE("braid arrangement Chen ranks") {
    auto braid = examples::braid_lc();
    for (const auto& s : all_strategies()) {
        CAPTURE(static_cast<int>(s.mode));
        CHECK(hilbert_range(braid, 5, s) == std::vector<Int>{4, 10, 15, 20});
    }
    ChenSequence seq = chen_ranks(braid, 5, {RankMode::verify, 7, std::nullopt});
    CHECK(seq.theta == std::vector<Int>{0, 6, 4, 10, 15, 20});
}

TEST_CASE("reduced and full routes agree") {
    RankStrategy s{RankMode::exact, 0, std::nullopt};
    AlexanderInvariant inv(examples::braid_lc());
    for (int k = 2; k <= 4; ++k) {
        Int full_dim = Int(inv.generators()) * inv.s_basis(k - 2).size() -
                       inv.full_matrix_rank(k, s);
        CHECK(full_dim == inv.hilbert(k, s));
    }
    AlexanderInvariant pencil(examples::pencil_lc(4));
    for (int k = 2; k <= 5; ++k) {
        Int full_dim = Int(pencil.generators()) * pencil.s_basis(k - 2).size() -
                       pencil.full_matrix_rank(k, s);
        CHECK(full_dim == pencil.hilbert(k, s));
    }
}

TEST_CASE("monomial arrangement (Ceva) Chen ranks") {
    RankStrategy s{RankMode::verify, 2026, std::nullopt};
    CHECK(hilbert_range(examples::ceva3_lc(), 5, s) == std::vector<Int>{12, 40, 56, 64});
}

TEST_CASE("deleted MacLane Chen ranks") {
    RankStrategy s{RankMode::verify, 11, std::nullopt};
    CHECK(hilbert_range(examples::deleted_maclane_lc(), 5, s) ==
          std::vector<Int>{7, 15, 21, 28});
}

TEST_CASE("complete graph arrangements") {
    RankStrategy s{RankMode::verify, 5, std::nullopt};
    auto k5 = graphic(examples::complete_graph(5));
    AlexanderInvariant inv(k5.lc);
    CHECK(inv.quotient_dim() == 10);
    CHECK(inv.hilbert(3, s) == 30);
    CHECK(inv.hilbert(4, s) == 45);

    // the graphic formula (k-1)(kappa_2 + kappa_3) holds from k = 3 on
    Int kq = Int(static_cast<long>(k5.kappa[2] + k5.kappa[3]));
    for (int k = 3; k <= 4; ++k) CHECK(inv.hilbert(k, s) == Int(k - 1) * kq);

    auto k4 = graphic(examples::complete_graph(4));
    AlexanderInvariant inv4(k4.lc);
    Int kq4 = Int(static_cast<long>(k4.kappa[2] + k4.kappa[3]));
    CHECK(kq4 == 5);
    CHECK(inv4.hilbert(2, s) == 4); // k = 2 deviates from the formula
    for (int k = 3; k <= 5; ++k) CHECK(inv4.hilbert(k, s) == Int(k - 1) * kq4);
}

TEST_CASE("pencils behave like free groups") {
    RankStrategy s{RankMode::exact, 0, std::nullopt};
    for (int m = 3; m <= 5; ++m) {
        auto seq = chen_ranks(examples::pencil_lc(m), 5, s);
        for (int k = 2; k <= 5; ++k)
            CHECK(seq.theta[static_cast<std::size_t>(k)] == free_group_chen(m - 1, k));
    }
    // a generic arrangement of 3 lines has no double points in common position
    // beyond pairs, so the invariant vanishes
    CHECK(hilbert_range(examples::generic_lc(3), 4, s) == std::vector<Int>{0, 0, 0});
}

TEST_CASE("free group Chen ranks") {
    CHECK(free_group_chen(2, 1) == 2);
    CHECK(free_group_chen(2, 3) == 2);
    CHECK(free_group_chen(4, 1) == 4);
    CHECK(free_group_chen(4, 2) == 6);
    CHECK(free_group_chen(1, 5) == 0);
    for (int n = 2; n <= 5; ++n) CHECK(free_group_chen(n, 2) == binomial(n, 2));
    CHECK(free_group_chen(3, 3) == 8);
    CHECK(free_group_chen(3, 4) == 15);
    CHECK_THROWS_AS(free_group_chen(0, 1), InputError);
    CHECK_THROWS_AS(free_group_chen(2, 0), InputError);
}

TEST_CASE("degree guards and degenerate inputs") {
    AlexanderInvariant braid(examples::braid_lc());
    RankStrategy s{RankMode::exact, 0, std::nullopt};
    CHECK_THROWS_AS(braid.hilbert(1, s), InputError);
    CHECK_THROWS_AS(chen_ranks(examples::braid_lc(), 1, s), InputError);

    // two lines: one pair flat, quotient is zero
    AlexanderInvariant two(examples::pencil_lc(2));
    CHECK(two.generators() == 1);
    CHECK(two.quotient_dim() == 0);
    for (int k = 2; k <= 4; ++k) CHECK(two.hilbert(k, s) == 0);
}

TEST_CASE("relabeling the lines does not change the ranks") {
    auto base = examples::braid_lc();
    RankStrategy s{RankMode::modular, 31, std::nullopt};
    auto reference = hilbert_range(base, 4, s);
    std::mt19937_64 rng(20260816);
    std::vector<int> perm(static_cast<std::size_t>(base.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(hilbert_range(relabel(base, perm), 4, s) == reference);
    }
}
