#pragma once

#include <map>

#include "chenranks/combinatorics.hpp"
#include "chenranks/osalgebra.hpp"
#include "chenranks/polyring.hpp"
#include "chenranks/rank.hpp"

namespace chenranks {

using exactla::IntColumns;
using exactla::RankStrategy;

// One element of the nbc basis of A_2: a rank-2 flat together with one of its
// non-minimal members.
struct NbcPair {
    std::vector<int> flat;
    int index;
};

std::vector<NbcPair> nbc_basis_a2(const LineCombinatorics& lc);

// e_j wedge (sum of e_i over the flat), expanded over the monomials of E_2.
ExteriorElement alpha2(const NbcPair& pair);

// Presentation of the linearized Alexander invariant over S = Q[x_0..x_{n-1}]:
// one generator per monomial of E_2, constant relation columns (one per nbc
// pair) and linear Koszul columns (one per monomial of E_3, with entries
// +x_a, -x_b, +x_c against the three facets of e_abc).
struct LinearTerm {
    int row;
    int var;
    int coeff;
};

struct GradedPresentation {
    int n = 0;
    int generators = 0;
    std::vector<std::uint64_t> e2_monomials;
    std::vector<std::vector<std::pair<int, Rational>>> constant_columns;
    std::vector<std::vector<LinearTerm>> linear_columns;
};

GradedPresentation build_delta_lin(const LineCombinatorics& lc);

struct ChenSequence {
    int kmax = 0;
    std::vector<Int> theta; // theta[k] for 1 <= k <= kmax; theta[0] unused
};

// Degreewise Hilbert function of the invariant. The constant columns span a
// fixed subspace U of E_2 tensored with every monomial, so ranks are taken
// after projecting the Koszul block to E_2/U; the projection is computed once
// with exact arithmetic. The full stacked matrix is kept available as an
// independent route for cross-checking.
class AlexanderInvariant {
  public:
    explicit AlexanderInvariant(LineCombinatorics lc);

    const LineCombinatorics& lc() const { return lc_; }
    int n() const { return lc_.n; }
    int generators() const { return pres_.generators; }
    int dim_a2() const { return static_cast<int>(pres_.constant_columns.size()); }
    int quotient_dim() const { return c_; } // dim B_2

    int hilbert(int k, const RankStrategy& strategy) const;

    // Koszul block over E_2/U at degree k: rows indexed (monomial of S_{k-2})
    // x (quotient coordinate), columns (monomial of E_3) x (S_{k-3}).
    IntColumns reduced_koszul(int k) const;

    // Definition-faithful route: rank of the full stacked degree-k matrix,
    // constant columns tensored with S_{k-2} next to Koszul columns tensored
    // with S_{k-3}. Quadratically bigger than reduced_koszul; used to
    // cross-check it.
    int full_matrix_rank(int k, const RankStrategy& strategy) const;

    const GradedPresentation& presentation() const { return pres_; }
    const MonomialBasis& s_basis(int d) const;

  private:
    LineCombinatorics lc_;
    GradedPresentation pres_;
    int c_ = 0;
    // integer-scaled image of each E_2 monomial in E_2/U (row scaling only)
    std::vector<std::vector<std::pair<int, std::int64_t>>> qcoords_;
    mutable std::map<int, MonomialBasis> s_bases_;
};

ChenSequence chen_ranks(const LineCombinatorics& lc, int kmax, const RankStrategy& strategy);

// (k-1) * C(k+n-2, k) for k >= 2; n for k = 1.
Int free_group_chen(int n, int k);

} // namespace chenranks
