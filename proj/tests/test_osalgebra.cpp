#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chenranks/errors.hpp"
#include "chenranks/examples.hpp"
#include "chenranks/osalgebra.hpp"
#include "chenranks/rank.hpp"
#include "oracles.hpp"

using namespace chenranks;

namespace {

std::uint64_t mask_of(std::initializer_list<int> idx) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << i;
    return m;
}

// independent count of dim A_d: monomials containing no broken circuit
std::vector<int> nbc_dims(const Matroid& m) {
    std::vector<std::uint64_t> broken;
    for (const auto& c : m.circuits) {
        std::uint64_t b = 0;
        for (std::size_t i = 1; i < c.size(); ++i) b |= std::uint64_t{1} << c[i];
        broken.push_back(b);
    }
    std::vector<int> dims(static_cast<std::size_t>(m.rank) + 1, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.n); ++s) {
        int d = std::popcount(s);
        if (d > m.rank) continue;
        bool nbc = true;
        for (std::uint64_t b : broken)
            if ((s & b) == b) {
                nbc = false;
                break;
            }
        if (nbc) ++dims[static_cast<std::size_t>(d)];
    }
    return dims;
}

ExteriorElement elem(std::initializer_list<std::pair<std::uint64_t, int>> terms) {
    ExteriorElement e;
    for (auto [m, c] : terms) e.emplace_back(m, Rational(c));
    return normalized(std::move(e));
}

ExteriorElement random_element(std::mt19937_64& rng, int n, int degree, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    ExteriorElement e;
    for (int t = 0; t < terms; ++t) {
        std::uint64_t m = 0;
        while (std::popcount(m) < degree) m |= std::uint64_t{1} << (rng() % n);
        e.emplace_back(m, Rational(coeff(rng)));
    }
    return normalized(std::move(e));
}

} // namespace

TEST_CASE("wedge basics") {
    ExteriorElement e1 = elem({{mask_of({1}), 1}});
    ExteriorElement e2 = elem({{mask_of({2}), 1}});
    CHECK(wedge(e1, e2) == elem({{mask_of({1, 2}), 1}}));
    CHECK(wedge(e2, e1) == elem({{mask_of({1, 2}), -1}}));
    CHECK(wedge(e1, e1).empty());
    // (e1 - e4)(e1 - e5) = e4e5 - e1e5 + e1e4, the boundary of e_{145}
    ExteriorElement a = elem({{mask_of({1}), 1}, {mask_of({4}), -1}});
    ExteriorElement b = elem({{mask_of({1}), 1}, {mask_of({5}), -1}});
    CHECK(wedge(a, b) ==
          elem({{mask_of({1, 5}), -1}, {mask_of({1, 4}), 1}, {mask_of({4, 5}), 1}}));
    CHECK(wedge(a, b) == boundary(mask_of({1, 4, 5})));
}

TEST_CASE("wedge signs agree with inversion counting") {
    CHECK(wedge_sign(mask_of({0}), mask_of({1})) == 1);
    CHECK(wedge_sign(mask_of({1}), mask_of({0})) == -1);
    CHECK(wedge_sign(mask_of({0, 2}), mask_of({1})) == -1);
    CHECK(wedge_sign(mask_of({0, 1}), mask_of({2, 3})) == 1);
    CHECK(wedge_sign(mask_of({2, 3}), mask_of({0, 1})) == 1); // 4 inversions
    CHECK(wedge_sign(mask_of({0, 1}), mask_of({1, 2})) == 0);
    CHECK(wedge_sign(0, mask_of({3, 5})) == 1);
}

TEST_CASE("boundary of small monomials") {
    CHECK(boundary(mask_of({1, 2})) == elem({{mask_of({2}), 1}, {mask_of({1}), -1}}));
    CHECK(boundary(mask_of({1, 4, 5})) ==
          elem({{mask_of({4, 5}), 1}, {mask_of({1, 5}), -1}, {mask_of({1, 4}), 1}}));
    ExteriorElement d4 = boundary(mask_of({0, 1, 2, 3}));
    CHECK(d4.size() == 4);
    // signs alternate with the removed position
    CHECK(d4 == elem({{mask_of({1, 2, 3}), 1},
                      {mask_of({0, 2, 3}), -1},
                      {mask_of({0, 1, 3}), 1},
                      {mask_of({0, 1, 2}), -1}}));
}

TEST_CASE("boundary squares to zero and wedge is graded-commutative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t m = 0;
        int size = 2 + static_cast<int>(rng() % 4);
        while (std::popcount(m) < size) m |= std::uint64_t{1} << (rng() % 10);
        ExteriorElement once = boundary(m);
        ExteriorElement twice;
        for (const auto& [sub, c] : once) {
            for (auto& [mask2, c2] : boundary(sub)) twice.emplace_back(mask2, c * c2);
        }
        CHECK(normalized(std::move(twice)).empty());
    }
    for (int trial = 0; trial < 20; ++trial) {
        int p = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3);
        ExteriorElement x = random_element(rng, 9, p, 3);
        ExteriorElement y = random_element(rng, 9, q, 3);
        ExteriorElement xy = wedge(x, y);
        ExteriorElement yx = wedge(y, x);
        int sign = (p * q % 2) ? -1 : 1;
        for (auto& [m, c] : yx) c *= sign;
        CHECK(xy == normalized(std::move(yx)));
        ExteriorElement z = random_element(rng, 9, 1, 2);
        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
}

TEST_CASE("graded dimensions of the braid quotient") {
    OsAlgebra A(matroid_from_line_combinatorics(examples::braid_lc()));
    CHECK(A.a_dims() == std::vector<int>{1, 6, 11, 6});
    CHECK(A.ideal_rank(2) == 4);
    CHECK(A.ideal_rank(3) == 14);
    CHECK(A.a_dim(4) == 0); // everything above the rank dies
    // (1+t)(1+2t)(1+3t) = 1 + 6t + 11t^2 + 6t^3
    CHECK(nbc_dims(A.matroid()) == A.a_dims());
}

TEST_CASE("graded dimensions across the corpus match the broken-circuit count") {
    std::vector<Matroid> corpus = {
        matroid_from_line_combinatorics(examples::ceva3_lc()),
        matroid_from_line_combinatorics(examples::maclane_lc()),
        matroid_from_line_combinatorics(examples::deleted_maclane_lc()),
        matroid_from_line_combinatorics(examples::near_pencil_lc(5)),
        matroid_from_line_combinatorics(examples::pencil_lc(4)),
        matroid_from_line_combinatorics(examples::generic_lc(5)),
        graphic(examples::complete_graph(5)).matroid,
    };
    for (const auto& m : corpus) {
        OsAlgebra A(m);
        CHECK(A.a_dims() == nbc_dims(m));
    }
    OsAlgebra ceva(corpus[0]);
    CHECK(ceva.a_dims() == std::vector<int>{1, 9, 24, 16});
    OsAlgebra k5(corpus[6]);
    // coefficients of (1+t)(1+2t)(1+3t)(1+4t)
    CHECK(k5.a_dims() == std::vector<int>{1, 10, 35, 50, 24});
    OsAlgebra p3(matroid_from_line_combinatorics(examples::pencil_lc(3)));
    CHECK(p3.a_dims() == std::vector<int>{1, 3, 2});
    CHECK(p3.ideal_rank(2) == 1);
}

TEST_CASE("ideal pieces are canonical rref subspaces") {
    Matroid braid = matroid_from_line_combinatorics(examples::braid_lc());
    GradedSubspace i2 = os_ideal_piece(braid, 2);
    CHECK(i2.ambient_dim == 15);
    CHECK(i2.basis.size() == 4);
    CHECK(exactla::rref_canonical(i2.basis) == i2.basis);
    GradedSubspace i1 = os_ideal_piece(braid, 1);
    CHECK(i1.basis.empty());
    // the four circuit boundaries span I_2 exactly
    OsAlgebra A(braid);
    std::vector<std::vector<Rational>> gens;
    for (const auto& c : multiple_points(examples::braid_lc())) {
        std::vector<Rational> row(15, Rational(0));
        for (const auto& [mask, coeff] : boundary(mask_of({c[0], c[1], c[2]})))
            row[static_cast<std::size_t>(A.monomial_index(2, mask))] = coeff;
        gens.push_back(std::move(row));
    }
    CHECK(oracle::same_span(gens, i2.basis));
}

TEST_CASE("ideal membership is stable under multiplication by degree-1 elements") {
    std::mt19937_64 rng(2024);
    Matroid m = matroid_from_line_combinatorics(examples::ceva3_lc());
    OsAlgebra A(m);
    GradedSubspace i2 = A.ideal_piece(2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 15; ++trial) {
        // random element of I_2 = random combination of the basis
        std::vector<Rational> v(static_cast<std::size_t>(i2.ambient_dim), Rational(0));
        for (const auto& row : i2.basis) {
            Rational f(coeff(rng));
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += f * row[j];
        }
        ExteriorElement x;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) x.emplace_back(A.monomials(2)[j], v[j]);
        CHECK(A.in_ideal(2, x));
        ExteriorElement t = random_element(rng, 9, 1, 3);
        CHECK(A.in_ideal(3, wedge(t, x)));
    }
}

TEST_CASE("multiplication map ranks detect resonance") {
    OsAlgebra A(matroid_from_line_combinatorics(examples::braid_lc()));
    exactla::RankStrategy s{exactla::RankMode::exact, 0, std::nullopt};

    std::vector<Rational> zero(6, Rational(0));
    CHECK(exactla::rank(multiplication_map(A, zero), s) == 0);

    // generic direction with zero coordinate sum: kernel only contains a itself
    std::vector<Rational> generic = {Rational(1), Rational(2), Rational(-7),
                                     Rational(3), Rational(5), Rational(-4)};
    CHECK(exactla::rank(multiplication_map(A, generic), s) == 5);

    // a point of the local component at the triple {0,1,2}
    std::vector<Rational> local = {Rational(1), Rational(1), Rational(-2),
                                   Rational(0), Rational(0), Rational(0)};
    CHECK(6 - exactla::rank(multiplication_map(A, local), s) >= 2);
}

TEST_CASE("isotropic subspaces of the braid arrangement") {
    OsAlgebra A(matroid_from_line_combinatorics(examples::braid_lc()));
    std::vector<Rational> eta1 = {Rational(1), Rational(-1), Rational(0),
                                  Rational(-1), Rational(0), Rational(1)};
    std::vector<Rational> eta2 = {Rational(1), Rational(0), Rational(-1),
                                  Rational(0), Rational(-1), Rational(1)};
    CHECK(isotropic(A, {eta1, eta2}));
    CHECK(isotropic(A, {eta1}));
    std::vector<Rational> e0(6, Rational(0)), e1(6, Rational(0));
    e0[0] = 1;
    e1[1] = 1;
    CHECK(!isotropic(A, {e0, e1}));
}

TEST_CASE("generator multiplication tables agree with direct reduction") {
    std::mt19937_64 rng(55);
    OsAlgebra A(matroid_from_line_combinatorics(examples::braid_lc()));
    for (int d = 1; d <= 2; ++d) {
        for (int i = 0; i < 6; ++i) {
            const SparseMatrix& t = A.generator_multiplication(d, i);
            CHECK(t.rows == A.a_dim(d + 1));
            CHECK(t.cols == A.a_dim(d));
            for (int j = 0; j < t.cols; ++j) {
                std::uint64_t mono =
                    A.monomials(d)[static_cast<std::size_t>(A.a_basis(d)[static_cast<std::size_t>(j)])];
                ExteriorElement prod =
                    wedge(elem({{mask_of({i}), 1}}), ExteriorElement{{mono, Rational(1)}});
                std::vector<Rational> want = A.reduce_element(prod, d + 1);
                std::vector<Rational> got(static_cast<std::size_t>(t.rows), Rational(0));
                for (const auto& [r, v] : t.col[static_cast<std::size_t>(j)])
                    got[r] = v;
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("reduction is a projection onto the complement basis") {
    std::mt19937_64 rng(91);
    OsAlgebra A(matroid_from_line_combinatorics(examples::deleted_maclane_lc()));
    // reduce fixes complement monomials and kills the ideal
    for (int j = 0; j < A.a_dim(2); ++j) {
        std::uint64_t mono =
            A.monomials(2)[static_cast<std::size_t>(A.a_basis(2)[static_cast<std::size_t>(j)])];
        std::vector<Rational> coords = A.reduce_element({{mono, Rational(1)}}, 2);
        for (int r = 0; r < A.a_dim(2); ++r)
            CHECK(coords[static_cast<std::size_t>(r)] == (r == j ? 1 : 0));
    }
    for (int trial = 0; trial < 10; ++trial) {
        ExteriorElement x = random_element(rng, 8, 2, 4);
        std::vector<Rational> once = A.reduce_element(x, 2);
        ExteriorElement back;
        for (std::size_t j = 0; j < once.size(); ++j)
            if (once[j] != 0)
                back.emplace_back(
                    A.monomials(2)[static_cast<std::size_t>(A.a_basis(2)[j])], once[j]);
        CHECK(A.reduce_element(back, 2) == once);
    }
}
