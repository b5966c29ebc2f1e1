#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "chenranks/rational.hpp"

namespace chenranks {

// Degree-<=2 combinatorics of a central arrangement: hyperplanes are labeled
// 0..n-1 and `flats` holds every rank-2 flat, doubles included. Each flat is
// sorted and the list itself is in lexicographic order, so two values compare
// equal iff they describe the same combinatorics.
struct LineCombinatorics {
    int n = 0;
    std::vector<std::vector<int>> flats;

    bool operator==(const LineCombinatorics&) const = default;
};

// Validates the explicit flats (in range, sorted, pairwise sharing at most
// one index) and fills in the implicit doubles, so every pair of hyperplanes
// ends up in exactly one flat of the result.
LineCombinatorics make_line_combinatorics(int n, std::vector<std::vector<int>> explicit_flats);

// The flats of size >= 3 (the multiple points of a line arrangement).
std::vector<std::vector<int>> multiple_points(const LineCombinatorics& lc);

// pair_flat_index(lc)[i][j] is the position in lc.flats of the unique flat
// containing both i and j.
std::vector<std::vector<int>> pair_flat_index(const LineCombinatorics& lc);

// Moebius value of a rank-2 flat: |flat| - 1. Throws if `flat` is not one of
// lc's flats.
int mobius(const LineCombinatorics& lc, const std::vector<int>& flat);

struct Matroid {
    int n = 0;
    int rank = 0;
    std::vector<std::vector<int>> circuits; // each sorted, list sorted
};

// Extracts the rank-2 flats of <= 3-dimensional normal vectors. Rejects zero
// or proportional normals and any vector of length != 3.
LineCombinatorics from_normals(const std::vector<std::vector<Int>>& normals);

// Rank-3 matroid whose circuits are the 3-subsets inside a flat plus the
// 4-subsets containing none of those; degenerates to rank 2 (circuits = all
// 3-subsets) when a single flat holds every hyperplane.
Matroid matroid_from_line_combinatorics(const LineCombinatorics& lc);

struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct GraphicArrangement {
    LineCombinatorics lc;   // hyperplane i <-> edges[i]
    Matroid matroid;        // circuits = edge sets of simple cycles
    std::vector<long long> kappa; // kappa[s] = complete subgraphs on s+1 vertices
};

GraphicArrangement graphic(const Graph& g);

// Rank-2 flats {Y cap S : |Y cap S| >= 2} of the sub-arrangement on S, kept
// in the original labels.
std::vector<std::vector<int>> induced_flats(const LineCombinatorics& lc,
                                            const std::vector<int>& subset);

// Calls fn(subset, induced flats) for every subset of {0..n-1} with
// min_size <= |subset| <= max_size, in size-then-lexicographic order.
void for_each_subarrangement(
    const LineCombinatorics& lc, int min_size, int max_size,
    const std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&)>& fn);

// Relabels hyperplane i as perm[i] and re-canonicalizes the flat list.
LineCombinatorics relabel(const LineCombinatorics& lc, const std::vector<int>& perm);

} // namespace chenranks
