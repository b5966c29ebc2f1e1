#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chenranks/combinatorics.hpp"
#include "chenranks/sparse.hpp"

namespace chenranks {

using exactla::SparseMatrix;

// Homogeneous exterior-algebra element: (monomial bitmask, coefficient)
// pairs, sorted by mask, no zero coefficients.
using ExteriorElement = std::vector<std::pair<std::uint64_t, Rational>>;

// Shuffle sign of e_a wedge e_b for disjoint bitmasks; 0 when they overlap.
int wedge_sign(std::uint64_t a, std::uint64_t b);

ExteriorElement normalized(ExteriorElement x);
ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

// The alternating sum over single deletions from a monomial of size >= 2,
// indices taken in increasing order.
ExteriorElement boundary(std::uint64_t mask);

struct GradedSubspace {
    int degree = 0;
    int ambient_dim = 0;
    std::vector<std::vector<Rational>> basis; // canonical rref rows over the monomial basis
};

// Graded pieces of E/I for one matroid. Degrees are built lazily and cached:
// each one holds the monomial list, a reduced basis of the ideal piece I_d in
// pivot/tail form, and the complement monomials that serve as the canonical
// basis of A_d. Generator-multiplication tables A_d -> A_{d+1} are cached too,
// since the strand computations request them constantly.
class OsAlgebra {
  public:
    explicit OsAlgebra(Matroid m);

    int n() const { return m_.n; }
    int rank() const { return m_.rank; }
    const Matroid& matroid() const { return m_; }

    const std::vector<std::uint64_t>& monomials(int d) const;
    int monomial_index(int d, std::uint64_t mask) const;
    int ideal_rank(int d) const;
    int a_dim(int d) const;
    std::vector<int> a_dims() const; // d = 0..rank

    // positions into monomials(d) forming the canonical basis of A_d
    const std::vector<int>& a_basis(int d) const;

    // image of a vector of E_d (coordinates over monomials(d)) in A_d,
    // written in the canonical basis
    std::vector<Rational> reduce(int d, const std::vector<std::pair<int, Rational>>& v) const;
    std::vector<Rational> reduce_element(const ExteriorElement& x, int d) const;
    bool in_ideal(int d, const ExteriorElement& x) const;

    GradedSubspace ideal_piece(int d) const;

    // column j: coordinates in A_{d+1} of e_i wedge (j-th basis monomial of A_d)
    const SparseMatrix& generator_multiplication(int d, int i) const;

  private:
    struct Degree {
        bool built = false;
        std::vector<std::uint64_t> monomials;
        std::map<std::uint64_t, int> index;
        int rank = 0;
        std::vector<int> pivots;
        std::vector<std::vector<std::pair<int, Rational>>> tails; // per pivot slot
        std::vector<int> slot;       // monomial position -> pivot slot or -1
        std::vector<int> complement; // non-pivot positions
    };

    Matroid m_;
    mutable std::vector<Degree> deg_;
    mutable std::vector<std::map<int, SparseMatrix>> mult_;

    const Degree& degree(int d) const;
};

// One-shot wrappers.
std::vector<int> a_dims(const Matroid& m);
GradedSubspace os_ideal_piece(const Matroid& m, int d);

// Matrix of A_1 -> A_2, b |-> a.b, columns over e_0..e_{n-1}, rows over the
// canonical basis of A_2.
SparseMatrix multiplication_map(const OsAlgebra& A, const std::vector<Rational>& a);

// True iff every pairwise wedge of the given degree-1 vectors lies in I_2.
bool isotropic(const OsAlgebra& A, const std::vector<std::vector<Rational>>& vectors);

} // namespace chenranks
