#pragma once

#include <map>
#include <optional>

#include "chenranks/alexander.hpp"
#include "chenranks/osalgebra.hpp"
#include "chenranks/polyring.hpp"
#include "chenranks/rank.hpp"
#include "chenranks/resonance.hpp"

namespace chenranks {

// One internal degree of the Cartan-type complex with terms A_p (x) S-piece.
// The Tor strand in internal degree j has T_p = A_p (x) S_{j-p}, differential
// a (x) f -> sum_l (e_l a) (x) df/dx_l; the exactness strand in degree w has
// T_p = A_p (x) S_{w-rank+p}, differential a (x) f -> sum_l (e_l a) (x) x_l f.
// dims and differentials are indexed by the exterior-side degree p; positions
// whose polynomial piece would have negative degree are zero.
struct StrandComplex {
    int internal_degree = 0;
    std::vector<int> dims;                            // p = 0..rank
    std::vector<exactla::SparseMatrix> differentials; // [p]: T_p -> T_{p+1}
};

StrandComplex tor_strand(const OsAlgebra& algebra, int j);
StrandComplex epy_strand(const OsAlgebra& algebra, int w);

// Graded Betti numbers beta_{i,j} = dim Tor_i(A, k)_j over the exterior
// algebra, stored on the window i <= j <= i + rank - 1; everything outside the
// window is computed and asserted to vanish, not assumed.
struct BettiTable {
    int imax = 0;
    int rank = 0;
    std::map<std::pair<int, int>, long long> beta;

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

long long strand_homology(const OsAlgebra& algebra, int i, int j,
                          const exactla::RankStrategy& strategy);
long long strand_homology(const Matroid& m, int i, int j,
                          const exactla::RankStrategy& strategy);

BettiTable betti_table(const Matroid& m, int imax, const exactla::RankStrategy& strategy);

// theta_k = beta_{k-1,k} for 2 <= k <= kmax; a mismatch is a hard error since
// the equality is a theorem, not a conjecture.
bool cross_check_chen(const ChenSequence& theta, const BettiTable& b, int kmax);

// Exactness of 0 -> A_0 (x) S -> ... -> A_rank (x) S -> F(A) -> 0 at every
// interior position in all internal degrees <= bound.
bool epy_exactness(const Matroid& m, int bound, const exactla::RankStrategy& strategy);

struct ComplexityReport {
    std::optional<int> cx; // only for inputs of rank <= 3
    int dim_r1 = -1;       // max projective dimension of a component; -1 if none
    int fitted_degree = -1;
};

// cx = n-2 for a near-pencil and n-1 otherwise (rank <= 3 only); the fitted
// Hilbert-polynomial degree of the invariant must equal dim R^1.
ComplexityReport complexity_report(const Matroid& m, const LineCombinatorics& lc,
                                   const HVector& h, const ChenSequence& theta);

} // namespace chenranks
