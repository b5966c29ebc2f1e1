#include "chenranks/linstrand.hpp"

#include <algorithm>

#include "chenranks/errors.hpp"
#include "chenranks/polyfit.hpp"

namespace chenranks {

using exactla::RankStrategy;
using exactla::SparseMatrix;

namespace {

// (variable, multiplicity) pairs of a monomial code
std::vector<std::pair<int, int>> exponents(std::uint64_t code, int degree) {
    std::vector<int> vars = MonomialBasis::decode(code, degree);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        out.emplace_back(vars[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::uint64_t remove_one(std::uint64_t code, int degree, int var) {
    std::vector<int> vars = MonomialBasis::decode(code, degree);
    vars.erase(std::find(vars.begin(), vars.end(), var));
    return MonomialBasis::encode(vars);
}

// differential d_p of the internal-degree-j Tor strand:
// A_p (x) S_{j-p} -> A_{p+1} (x) S_{j-p-1}, a (x) f -> sum_l (e_l a) (x) df/dx_l
SparseMatrix tor_differential(const OsAlgebra& algebra, int j, int p,
                              const MonomialBasis& src, const MonomialBasis& dst) {
    int asrc = algebra.a_dim(p);
    int adst = algebra.a_dim(p + 1);
    SparseMatrix m(adst * dst.size(), asrc * src.size());
    for (int a = 0; a < asrc; ++a) {
        for (int mu = 0; mu < src.size(); ++mu) {
            int column = a * src.size() + mu;
            for (const auto& [l, mult] : exponents(src.codes[static_cast<std::size_t>(mu)], j - p)) {
                int nu = dst.index(remove_one(src.codes[static_cast<std::size_t>(mu)], j - p, l));
                const SparseMatrix& gen = algebra.generator_multiplication(p, l);
                for (const auto& [b, val] : gen.col[static_cast<std::size_t>(a)])
                    m.set(static_cast<int>(b) * dst.size() + nu, column, Rational(mult) * val);
            }
        }
    }
    m.finalize();
    return m;
}

// differential of the exactness strand in internal degree w:
// A_p (x) S_{w-rank+p} -> A_{p+1} (x) S_{w-rank+p+1}, a (x) f -> sum_l (e_l a) (x) x_l f
SparseMatrix epy_differential(const OsAlgebra& algebra, int w, int p,
                              const MonomialBasis& src, const MonomialBasis& dst) {
    int asrc = algebra.a_dim(p);
    int adst = algebra.a_dim(p + 1);
    int dsrc = w - algebra.rank() + p;
    SparseMatrix m(adst * dst.size(), asrc * src.size());
    for (int a = 0; a < asrc; ++a) {
        for (int mu = 0; mu < src.size(); ++mu) {
            int column = a * src.size() + mu;
            for (int l = 0; l < algebra.n(); ++l) {
                int nu = dst.index(
                    MonomialBasis::multiply(src.codes[static_cast<std::size_t>(mu)], dsrc, l));
                const SparseMatrix& gen = algebra.generator_multiplication(p, l);
                for (const auto& [b, val] : gen.col[static_cast<std::size_t>(a)])
                    m.set(static_cast<int>(b) * dst.size() + nu, column, val);
            }
        }
    }
    m.finalize();
    return m;
}

StrandComplex build_strand(const OsAlgebra& algebra, int internal_degree, bool tor) {
    int ell = algebra.rank();
    StrandComplex sc;
    sc.internal_degree = internal_degree;
    std::vector<std::optional<MonomialBasis>> bases(static_cast<std::size_t>(ell) + 1);
    sc.dims.assign(static_cast<std::size_t>(ell) + 1, 0);
    for (int p = 0; p <= ell; ++p) {
        int d = tor ? internal_degree - p : internal_degree - ell + p;
        if (d < 0) continue;
        bases[static_cast<std::size_t>(p)].emplace(algebra.n(), d);
        sc.dims[static_cast<std::size_t>(p)] =
            algebra.a_dim(p) * bases[static_cast<std::size_t>(p)]->size();
    }
    for (int p = 0; p < ell; ++p) {
        const auto& src = bases[static_cast<std::size_t>(p)];
        const auto& dst = bases[static_cast<std::size_t>(p + 1)];
        if (!src || !dst || sc.dims[static_cast<std::size_t>(p)] == 0 ||
            sc.dims[static_cast<std::size_t>(p + 1)] == 0) {
            sc.differentials.emplace_back(sc.dims[static_cast<std::size_t>(p + 1)],
                                          sc.dims[static_cast<std::size_t>(p)]);
            continue;
        }
        sc.differentials.push_back(tor ? tor_differential(algebra, internal_degree, p, *src, *dst)
                                       : epy_differential(algebra, internal_degree, p, *src, *dst));
    }
    return sc;
}

int safe_rank(const SparseMatrix& m, const RankStrategy& strategy) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return exactla::rank(m, strategy);
}

// homology dimensions h_p = dim T_p - rank d_p - rank d_{p-1} of a strand
std::vector<long long> strand_homology_profile(const StrandComplex& sc,
                                               const RankStrategy& strategy) {
    int ell = static_cast<int>(sc.differentials.size());
    std::vector<int> r(static_cast<std::size_t>(ell) + 1, 0);
    for (int p = 0; p < ell; ++p)
        r[static_cast<std::size_t>(p)] = safe_rank(sc.differentials[static_cast<std::size_t>(p)],
                                                   strategy);
    std::vector<long long> h(static_cast<std::size_t>(ell) + 1, 0);
    for (int p = 0; p <= ell; ++p) {
        long long v = sc.dims[static_cast<std::size_t>(p)] - r[static_cast<std::size_t>(p)];
        if (p > 0) v -= r[static_cast<std::size_t>(p - 1)];
        if (v < 0) throw InvariantError("negative strand homology dimension");
        h[static_cast<std::size_t>(p)] = v;
    }
    return h;
}

} // namespace

StrandComplex tor_strand(const OsAlgebra& algebra, int j) {
    if (j < 0) throw InputError("internal degree must be nonnegative");
    return build_strand(algebra, j, true);
}

StrandComplex epy_strand(const OsAlgebra& algebra, int w) {
    if (w < 0) throw InputError("internal degree must be nonnegative");
    return build_strand(algebra, w, false);
}

long long strand_homology(const OsAlgebra& algebra, int i, int j,
                          const RankStrategy& strategy) {
    if (i < 0 || j < 0) throw InputError("Tor indices must be nonnegative");
    int p = j - i;
    if (p < 0 || p > algebra.rank()) return 0; // the strand has no term there
    int ell = algebra.rank();
    int n = algebra.n();
    auto basis_at = [&](int q) -> std::optional<MonomialBasis> {
        if (j - q < 0) return std::nullopt;
        return MonomialBasis(n, j - q);
    };
    auto dim_at = [&](int q) -> long long {
        if (q < 0 || q > ell || j - q < 0) return 0;
        return static_cast<long long>(algebra.a_dim(q)) * monomial_count(n, j - q).get_si();
    };
    long long h = dim_at(p);
    if (p < ell && dim_at(p) > 0 && dim_at(p + 1) > 0) {
        auto src = basis_at(p);
        auto dst = basis_at(p + 1);
        h -= safe_rank(tor_differential(algebra, j, p, *src, *dst), strategy);
    }
    if (p > 0 && dim_at(p - 1) > 0 && dim_at(p) > 0) {
        auto src = basis_at(p - 1);
        auto dst = basis_at(p);
        h -= safe_rank(tor_differential(algebra, j, p - 1, *src, *dst), strategy);
    }
    if (h < 0) throw InvariantError("negative strand homology dimension");
    return h;
}

long long strand_homology(const Matroid& m, int i, int j, const RankStrategy& strategy) {
    OsAlgebra algebra(m);
    return strand_homology(algebra, i, j, strategy);
}

BettiTable betti_table(const Matroid& m, int imax, const RankStrategy& strategy) {
    if (imax < 1) throw InputError("imax must be at least 1");
    OsAlgebra algebra(m);
    int ell = algebra.rank();
    BettiTable table;
    table.imax = imax;
    table.rank = ell;
    for (int j = 0; j <= imax + ell - 1; ++j) {
        std::vector<long long> h = strand_homology_profile(tor_strand(algebra, j), strategy);
        for (int p = 0; p <= ell; ++p) {
            int i = j - p;
            if (i < 0) continue;
            bool in_window = j <= i + ell - 1;
            if (i <= imax && in_window)
                table.beta[{i, j}] = h[static_cast<std::size_t>(p)];
            else if (!in_window && h[static_cast<std::size_t>(p)] != 0)
                throw InvariantError("nonzero Betti number outside the regularity window");
        }
    }
    return table;
}

bool cross_check_chen(const ChenSequence& theta, const BettiTable& b, int kmax) {
    if (kmax < 2) throw InputError("the comparison starts at degree 2");
    if (theta.kmax < kmax || b.imax < kmax - 1)
        throw InputError("both sides must be computed through kmax");
    for (int k = 2; k <= kmax; ++k)
        if (theta.theta[static_cast<std::size_t>(k)] != static_cast<long>(b.at(k - 1, k)))
            throw InvariantError("Chen rank and linear-strand Betti number differ at k = " +
                                 std::to_string(k));
    return true;
}

bool epy_exactness(const Matroid& m, int bound, const RankStrategy& strategy) {
    if (bound < 2) throw InputError("exactness bound must be at least 2");
    OsAlgebra algebra(m);
    int ell = algebra.rank();
    for (int w = 2; w <= bound; ++w) {
        StrandComplex sc = epy_strand(algebra, w);
        std::vector<int> r(static_cast<std::size_t>(ell), 0);
        for (int p = 0; p < ell; ++p)
            r[static_cast<std::size_t>(p)] =
                safe_rank(sc.differentials[static_cast<std::size_t>(p)], strategy);
        for (int p = 0; p < ell; ++p) {
            long long expected = r[static_cast<std::size_t>(p)];
            if (p > 0) expected += r[static_cast<std::size_t>(p - 1)];
            if (sc.dims[static_cast<std::size_t>(p)] != expected) return false;
        }
    }
    return true;
}

ComplexityReport complexity_report(const Matroid& m, const LineCombinatorics& lc,
                                   const HVector& h, const ChenSequence& theta) {
    ComplexityReport report;
    for (const auto& [r, count] : h.h)
        if (count > 0) report.dim_r1 = std::max(report.dim_r1, r);
    report.fitted_degree = fit_hilbert_polynomial(theta).degree;
    if (report.fitted_degree != report.dim_r1)
        throw InvariantError("fitted Hilbert degree disagrees with the resonance dimension");
    if (m.rank <= 3) {
        bool near_pencil = false;
        for (const auto& y : lc.flats)
            if (static_cast<int>(y.size()) == lc.n - 1) near_pencil = true;
        report.cx = near_pencil ? lc.n - 2 : lc.n - 1;
    }
    return report;
}

} // namespace chenranks
