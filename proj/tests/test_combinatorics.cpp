#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "chenranks/combinatorics.hpp"
#include "chenranks/errors.hpp"
#include "chenranks/examples.hpp"

using namespace chenranks;

namespace {

// every pair of hyperplanes must lie in exactly one flat
void check_pair_coverage(const LineCombinatorics& lc) {
    std::vector<std::vector<int>> count(static_cast<std::size_t>(lc.n),
                                        std::vector<int>(static_cast<std::size_t>(lc.n), 0));
    for (const auto& f : lc.flats)
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
                ++count[static_cast<std::size_t>(f[a])][static_cast<std::size_t>(f[b])];
    for (int i = 0; i < lc.n; ++i)
        for (int j = i + 1; j < lc.n; ++j)
            CHECK(count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 1);
}

// rank-2 flats recovered from a matroid's 3-element circuits
std::vector<std::vector<int>> flats_from_circuits(const Matroid& m) {
    std::set<std::vector<int>> triples(m.circuits.begin(), m.circuits.end());
    std::vector<std::vector<int>> out;
    std::vector<std::vector<char>> done(static_cast<std::size_t>(m.n),
                                        std::vector<char>(static_cast<std::size_t>(m.n), 0));
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b) {
            if (done[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            std::vector<int> flat = {a, b};
            for (int c = 0; c < m.n; ++c) {
                if (c == a || c == b) continue;
                std::vector<int> t = {a, b, c};
                std::sort(t.begin(), t.end());
                if (triples.count(t)) flat.push_back(c);
            }
            std::sort(flat.begin(), flat.end());
            for (std::size_t x = 0; x < flat.size(); ++x)
                for (std::size_t y = x + 1; y < flat.size(); ++y)
                    done[static_cast<std::size_t>(flat[x])][static_cast<std::size_t>(flat[y])] = 1;
            out.push_back(std::move(flat));
        }
    std::sort(out.begin(), out.end());
    return out;
}

void check_circuit_axioms(const Matroid& m) {
    for (std::size_t i = 0; i < m.circuits.size(); ++i)
        for (std::size_t j = 0; j < m.circuits.size(); ++j) {
            if (i == j) continue;
            CHECK(!std::includes(m.circuits[i].begin(), m.circuits[i].end(),
                                 m.circuits[j].begin(), m.circuits[j].end()));
        }
    // elimination: C1 != C2, e in both -> some circuit inside (C1 u C2) - e
    for (std::size_t i = 0; i < m.circuits.size(); ++i)
        for (std::size_t j = i + 1; j < m.circuits.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(m.circuits[i].begin(), m.circuits[i].end(),
                                  m.circuits[j].begin(), m.circuits[j].end(),
                                  std::back_inserter(common));
            std::vector<int> both;
            std::set_union(m.circuits[i].begin(), m.circuits[i].end(), m.circuits[j].begin(),
                           m.circuits[j].end(), std::back_inserter(both));
            for (int e : common) {
                std::vector<int> rest;
                for (int x : both)
                    if (x != e) rest.push_back(x);
                bool found = false;
                for (const auto& c : m.circuits)
                    if (std::includes(rest.begin(), rest.end(), c.begin(), c.end())) {
                        found = true;
                        break;
                    }
                CHECK(found);
            }
        }
}

} // namespace

TEST_CASE("braid normals give the frozen rank-2 flats") {
    LineCombinatorics lc = examples::braid_lc();
    std::vector<std::vector<int>> expect = {{0, 1, 2}, {0, 3, 4}, {0, 5}, {1, 3},
                                            {1, 4, 5}, {2, 3, 5}, {2, 4}};
    CHECK(lc.n == 6);
    CHECK(lc.flats == expect);
    CHECK(multiple_points(lc) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}});
    check_pair_coverage(lc);
}

TEST_CASE("generic and pencil normals") {
    LineCombinatorics g = from_normals({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(g.flats == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    LineCombinatorics p = from_normals({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}});
    CHECK(p.flats == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("normals validation") {
    CHECK_THROWS_AS(from_normals({{1, 0, 0}, {2, 0, 0}}), InputError);
    CHECK_THROWS_AS(from_normals({{0, 0, 0}}), InputError);
    CHECK_THROWS_AS(from_normals({{1, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(from_normals({{1, 0, 0, 0}, {0, 1, 0, 0}}), InputError);
    CHECK_THROWS_AS(from_normals({}), InputError);
}

TEST_CASE("flat list validation") {
    CHECK_THROWS_AS(make_line_combinatorics(4, {{0, 1, 2}, {1, 2, 3}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(4, {{0, 1, 2}, {0, 1, 2}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(3, {{2, 1}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(3, {{1}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(make_line_combinatorics(0, {}), InputError);
}

TEST_CASE("mobius values") {
    LineCombinatorics braid = examples::braid_lc();
    CHECK(mobius(braid, {0, 1, 2}) == 2);
    CHECK(mobius(braid, {0, 5}) == 1);
    CHECK_THROWS_AS(mobius(braid, {0, 1, 3}), InputError);
    LineCombinatorics np6 = examples::near_pencil_lc(6);
    CHECK(mobius(np6, {0, 1, 2, 3, 4}) == 4);
}

TEST_CASE("braid matroid circuits") {
    Matroid m = matroid_from_line_combinatorics(examples::braid_lc());
    CHECK(m.rank == 3);
    std::vector<std::vector<int>> expect = {{0, 1, 2},    {0, 1, 3, 5}, {0, 2, 4, 5}, {0, 3, 4},
                                            {1, 2, 3, 4}, {1, 4, 5},    {2, 3, 5}};
    CHECK(m.circuits == expect);
    check_circuit_axioms(m);
    CHECK(flats_from_circuits(m) == examples::braid_lc().flats);
}

TEST_CASE("pencil matroids have rank 2") {
    Matroid p3 = matroid_from_line_combinatorics(examples::pencil_lc(3));
    CHECK(p3.rank == 2);
    CHECK(p3.circuits == std::vector<std::vector<int>>{{0, 1, 2}});
    Matroid p5 = matroid_from_line_combinatorics(examples::pencil_lc(5));
    CHECK(p5.rank == 2);
    CHECK(p5.circuits.size() == 10); // all 3-subsets of 5
    check_circuit_axioms(p5);
    Matroid two = matroid_from_line_combinatorics(examples::pencil_lc(2));
    CHECK(two.rank == 2);
    CHECK(two.circuits.empty());
}

TEST_CASE("affine plane combinatorics") {
    LineCombinatorics ceva = examples::ceva3_lc();
    CHECK(ceva.n == 9);
    CHECK(ceva.flats.size() == 12); // no doubles at all
    for (const auto& f : ceva.flats) CHECK(f.size() == 3);
    check_pair_coverage(ceva);
    // every point lies on four lines
    for (int p = 0; p < 9; ++p) {
        int on = 0;
        for (const auto& f : ceva.flats)
            if (std::binary_search(f.begin(), f.end(), p)) ++on;
        CHECK(on == 4);
    }
    Matroid m = matroid_from_line_combinatorics(ceva);
    CHECK(m.circuits.size() == 66); // 12 collinear triples + 54 transverse 4-sets
    check_circuit_axioms(m);
    CHECK(flats_from_circuits(m) == ceva.flats);
}

TEST_CASE("point and line deletion from the affine plane") {
    LineCombinatorics ml = examples::maclane_lc();
    CHECK(ml.n == 8);
    auto mp = multiple_points(ml);
    CHECK(mp.size() == 8);
    // an 8_3 configuration: every point on exactly three of the triples
    for (int p = 0; p < 8; ++p) {
        int on = 0;
        for (const auto& f : mp)
            if (std::binary_search(f.begin(), f.end(), p)) ++on;
        CHECK(on == 3);
    }
    check_pair_coverage(ml);
    LineCombinatorics dm = examples::deleted_maclane_lc();
    CHECK(dm.n == 8);
    CHECK(multiple_points(dm).size() == 7);
    check_pair_coverage(dm);
    check_circuit_axioms(matroid_from_line_combinatorics(dm));
}

TEST_CASE("graphic arrangements") {
    GraphicArrangement k4 = graphic(examples::complete_graph(4));
    CHECK(k4.lc.n == 6);
    CHECK(multiple_points(k4.lc).size() == 4);
    CHECK(k4.kappa[1] == 6);
    CHECK(k4.kappa[2] == 4);
    CHECK(k4.kappa[3] == 1);
    CHECK(k4.matroid.rank == 3);
    CHECK(k4.matroid.circuits.size() == 7); // 4 triangles + 3 quadrilaterals
    check_circuit_axioms(k4.matroid);

    GraphicArrangement k5 = graphic(examples::complete_graph(5));
    CHECK(k5.lc.n == 10);
    CHECK(k5.matroid.rank == 4);
    CHECK(k5.kappa[2] == 10);
    CHECK(k5.kappa[3] == 5);
    CHECK(k5.kappa[4] == 1);
    CHECK(k5.matroid.circuits.size() == 37); // 10 + 5*3 + 12 simple cycles
    check_circuit_axioms(k5.matroid);
    for (const auto& c : k5.matroid.circuits) CHECK((c.size() >= 3 && c.size() <= 5));

    Graph tree{4, {{0, 1}, {1, 2}, {2, 3}}};
    GraphicArrangement t = graphic(tree);
    CHECK(multiple_points(t.lc).empty());
    CHECK(t.kappa[2] == 0);
    CHECK(t.matroid.rank == 3);
    CHECK(t.matroid.circuits.empty());
}

TEST_CASE("complete graph on four vertices matches the braid combinatorics") {
    LineCombinatorics braid = examples::braid_lc();
    LineCombinatorics k4 = graphic(examples::complete_graph(4)).lc;
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    bool iso = false;
    do {
        if (relabel(k4, perm) == braid) {
            iso = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(iso);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(graphic(Graph{3, {{0, 0}}}), InputError);
    CHECK_THROWS_AS(graphic(Graph{3, {{0, 1}, {1, 0}}}), InputError);
    CHECK_THROWS_AS(graphic(Graph{3, {{0, 3}}}), InputError);
    CHECK_THROWS_AS(graphic(Graph{2, {}}), InputError);
}

TEST_CASE("induced sub-arrangement flats") {
    LineCombinatorics braid = examples::braid_lc();
    CHECK(induced_flats(braid, {0, 1, 2}) == std::vector<std::vector<int>>{{0, 1, 2}});
    std::vector<int> all = {0, 1, 2, 3, 4, 5};
    CHECK(induced_flats(braid, all) == braid.flats);
    LineCombinatorics ceva = examples::ceva3_lc();
    CHECK(induced_flats(ceva, {0, 1, 3}) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 3}});
    // subsets that cut a triple down to a pair keep the pair as a double
    CHECK(induced_flats(braid, {0, 1, 3, 5}) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 3}, {0, 5}, {1, 3}, {1, 5}, {3, 5}});
}

TEST_CASE("sub-arrangement enumeration") {
    LineCombinatorics braid = examples::braid_lc();
    int count = 0;
    std::set<std::vector<int>> seen;
    for_each_subarrangement(braid, 3, 6, [&](const std::vector<int>& s, const auto& fl) {
        ++count;
        CHECK(seen.insert(s).second);
        CHECK(fl == induced_flats(braid, s));
    });
    CHECK(count == 20 + 15 + 6 + 1);
    count = 0;
    for_each_subarrangement(braid, 3, 4, [&](const auto&, const auto&) { ++count; });
    CHECK(count == 35);
    CHECK_THROWS_AS(for_each_subarrangement(braid, 2, 6, [](const auto&, const auto&) {}),
                    InputError);
}

TEST_CASE("relabeling round-trips") {
    LineCombinatorics braid = examples::braid_lc();
    std::vector<int> perm = {3, 0, 5, 1, 4, 2};
    LineCombinatorics moved = relabel(braid, perm);
    check_pair_coverage(moved);
    CHECK(multiple_points(moved).size() == 4);
    std::vector<int> inverse(6);
    for (int i = 0; i < 6; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    CHECK(relabel(moved, inverse) == braid);
    CHECK_THROWS_AS(relabel(braid, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(relabel(braid, {0, 0, 1, 2, 3, 4}), InputError);
}

TEST_CASE("pencil and near-pencil builders") {
    LineCombinatorics p4 = examples::pencil_lc(4);
    CHECK(p4.flats == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    LineCombinatorics np5 = examples::near_pencil_lc(5);
    CHECK(multiple_points(np5) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(np5.flats.size() == 1 + 4);
    check_pair_coverage(np5);
    LineCombinatorics g4 = examples::generic_lc(4);
    CHECK(g4.flats.size() == 6);
    CHECK(multiple_points(g4).empty());
    CHECK(matroid_from_line_combinatorics(g4).rank == 3);
    CHECK(matroid_from_line_combinatorics(examples::generic_lc(2)).rank == 2);
    CHECK(matroid_from_line_combinatorics(examples::generic_lc(1)).rank == 1);
}
