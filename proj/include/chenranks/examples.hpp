#pragma once

#include <numeric>
#include <string>

#include "chenranks/combinatorics.hpp"
#include "chenranks/errors.hpp"

// The arrangements used throughout the test-suite and exposed through the
// CLI example registry.
namespace chenranks::examples {

// Six planes in C^3: x, y, x-y, x-z, z, y-z. With these labels the triple
// points come out as {0,1,2}, {0,3,4}, {1,4,5}, {2,3,5}.
inline std::vector<std::vector<Int>> braid_normals() {
    return {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 0, -1}, {0, 0, 1}, {0, 1, -1}};
}

inline LineCombinatorics braid_lc() { return from_normals(braid_normals()); }

// m lines through a single point.
inline LineCombinatorics pencil_lc(int m) {
    if (m < 2) throw InputError("pencil needs at least 2 lines");
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 0);
    return make_line_combinatorics(m, {all});
}

// m-1 lines through a single point plus one line in general position.
inline LineCombinatorics near_pencil_lc(int m) {
    if (m < 3) throw InputError("near-pencil needs at least 3 lines");
    std::vector<int> bundle(static_cast<std::size_t>(m - 1));
    std::iota(bundle.begin(), bundle.end(), 0);
    return make_line_combinatorics(m, {bundle});
}

// n lines in general position: doubles only.
inline LineCombinatorics generic_lc(int n) {
    if (n < 1) throw InputError("arrangement needs at least one hyperplane");
    return make_line_combinatorics(n, {});
}

inline Graph complete_graph(int v) {
    if (v < 2) throw InputError("complete graph needs at least 2 vertices");
    Graph g;
    g.vertices = v;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) g.edges.emplace_back(a, b);
    return g;
}

// Nine lines whose multiple points realize the point-line incidence of the
// affine plane over Z_3: hyperplane (a,b) gets label 3a+b and the twelve
// affine lines become triple points.
inline LineCombinatorics ceva3_lc() {
    std::vector<std::vector<int>> lines;
    const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    for (const auto& d : dirs) {
        std::vector<char> taken(9, 0);
        for (int p = 0; p < 9; ++p) {
            if (taken[static_cast<std::size_t>(p)]) continue;
            std::vector<int> line;
            int a = p / 3, b = p % 3;
            for (int t = 0; t < 3; ++t) {
                int q = ((a + t * d[0]) % 3) * 3 + (b + t * d[1]) % 3;
                taken[static_cast<std::size_t>(q)] = 1;
                line.push_back(q);
            }
            std::sort(line.begin(), line.end());
            lines.push_back(std::move(line));
        }
    }
    return make_line_combinatorics(9, std::move(lines));
}

// Delete the last point of the affine plane: the four lines through it drop
// to doubles and the remaining eight triples form the MacLane matroid.
inline LineCombinatorics maclane_lc() {
    LineCombinatorics ceva = ceva3_lc();
    std::vector<std::vector<int>> triples;
    for (const auto& f : ceva.flats)
        if (f.size() == 3 && f.back() != 8) triples.push_back(f);
    return make_line_combinatorics(8, std::move(triples));
}

// MacLane with its lexicographically first triple point broken up.
inline LineCombinatorics deleted_maclane_lc() {
    LineCombinatorics ml = maclane_lc();
    auto triples = multiple_points(ml);
    triples.erase(triples.begin());
    return make_line_combinatorics(8, std::move(triples));
}

} // namespace chenranks::examples
