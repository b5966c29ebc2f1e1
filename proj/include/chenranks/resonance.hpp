#pragma once

#include <map>
#include <optional>

#include "chenranks/alexander.hpp"
#include "chenranks/combinatorics.hpp"
#include "chenranks/osalgebra.hpp"

namespace chenranks {

struct Partition {
    std::vector<int> ground;              // sorted
    std::vector<std::vector<int>> blocks; // disjoint, nonempty, union = ground
};

enum class ComponentKind { local, essential };

// A component of the first resonance variety: a linear subspace of Q^n inside
// the hyperplane sum(a_i) = 0, stored by its canonical reduced row-echelon
// basis. Local components come from rank-2 flats; essential ones from
// neighborly partitions of sub-arrangements.
struct ResonanceComponent {
    std::vector<std::vector<Rational>> basis;
    int projective_dimension = 0;
    ComponentKind kind = ComponentKind::local;
    std::vector<int> flat;                          // local only
    std::vector<int> subarrangement;                // essential only
    std::vector<std::vector<int>> partition_blocks; // essential only
    bool verified = false;                          // isotropy certificate
};

struct HVector {
    std::map<int, long long> h; // projective dimension -> component count
    long long total() const {
        long long t = 0;
        for (const auto& [r, c] : h) t += c;
        return t;
    }
};

struct SearchLimits {
    int max_subset = -1; // -1: no cap below n
    int max_blocks = 5;
};

struct ComponentSearch {
    std::vector<ResonanceComponent> components;
    HVector h;
    bool complete = true; // false when the limits skipped part of the search
};

// A point a != 0 is resonant when the kernel of multiplication A_1 -> A_2 by a
// contains more than the line through a itself.
bool is_resonant(const OsAlgebra& algebra, const std::vector<Rational>& a);
bool is_resonant(const Matroid& m, const std::vector<Rational>& a);

std::vector<ResonanceComponent> local_components(const LineCombinatorics& lc);

// Neighborly: for every rank-2 flat Y of the (sub-)arrangement and every block
// pi, mu(Y) <= |Y n pi| forces Y inside pi. The almost-neighborly variant only
// quantifies over flats with mu(Y) > 1. Flats are given in original labels so
// induced sub-arrangements can be tested without relabeling.
bool is_neighborly(const std::vector<std::vector<int>>& flats, const Partition& p);
bool is_neighborly(const LineCombinatorics& lc, const Partition& p);
bool is_almost_neighborly(const std::vector<std::vector<int>>& flats, const Partition& p);
bool is_almost_neighborly(const LineCombinatorics& lc, const Partition& p);

// Candidate subspace of a partition of a sub-arrangement: supported on the
// subset, constant on blocks, and summing to zero across every flat that meets
// the subset in >= 2 points not all in one block. None when dim < 2.
std::optional<std::vector<std::vector<Rational>>>
candidate_subspace(const LineCombinatorics& lc, const std::vector<int>& subset,
                   const Partition& p);

ComponentSearch enumerate_components(const LineCombinatorics& lc, const Matroid& m,
                                     const SearchLimits& limits = {});

// (k-1) * sum_r h_r * C(r+k-1, k): the conjectured value of theta_k.
Int conjecture_rhs(const HVector& h, int k);

// Hilbert function of the invariant of a single component of projective
// dimension r: (k-1) * C(r+k-1, k), the free-group value for rank r+1.
Int bp_hilbert(int r, int k);

struct LowerBoundReport {
    int k_min = 0;
    int k_max = 0;
    int stabilization = 0;       // first k with all later differences >= 0
    std::vector<Int> difference; // difference[i] = theta_{k_min+i} - rhs(k_min+i)
};

// theta_k >= conjecture_rhs(k) must hold for k large; the report records the
// differences and the first index from which they stay nonnegative. All
// differences negative at the top of the range is a hard error.
LowerBoundReport lower_bound_check(const ChenSequence& theta, const HVector& h, int k_min,
                                   int k_max);

} // namespace chenranks
