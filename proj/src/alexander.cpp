#include "chenranks/alexander.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "chenranks/elim.hpp"
#include "chenranks/errors.hpp"

namespace chenranks {

using exactla::QOps;
using exactla::SparseMatrix;

std::vector<NbcPair> nbc_basis_a2(const LineCombinatorics& lc) {
    std::vector<NbcPair> out;
    for (const auto& f : lc.flats)
        for (std::size_t i = 1; i < f.size(); ++i) out.push_back({f, f[i]});
    return out;
}

ExteriorElement alpha2(const NbcPair& pair) {
    ExteriorElement out;
    std::uint64_t jbit = std::uint64_t{1} << pair.index;
    for (int i : pair.flat) {
        if (i == pair.index) continue;
        std::uint64_t ibit = std::uint64_t{1} << i;
        out.emplace_back(jbit | ibit, Rational(wedge_sign(jbit, ibit)));
    }
    return normalized(std::move(out));
}

namespace {

std::vector<std::uint64_t> masks_of_degree(int n, int d) {
    std::vector<std::uint64_t> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(pick.size()) == d) {
            std::uint64_t m = 0;
            for (int i : pick) m |= std::uint64_t{1} << i;
            out.push_back(m);
            return;
        }
        for (int v = lo; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

GradedPresentation build_delta_lin(const LineCombinatorics& lc) {
    GradedPresentation p;
    p.n = lc.n;
    p.e2_monomials = masks_of_degree(lc.n, 2);
    p.generators = static_cast<int>(p.e2_monomials.size());
    std::map<std::uint64_t, int> row_of;
    for (std::size_t i = 0; i < p.e2_monomials.size(); ++i)
        row_of[p.e2_monomials[i]] = static_cast<int>(i);

    for (const NbcPair& pair : nbc_basis_a2(lc)) {
        std::vector<std::pair<int, Rational>> col;
        for (const auto& [mask, coeff] : alpha2(pair)) col.emplace_back(row_of.at(mask), coeff);
        p.constant_columns.push_back(std::move(col));
    }

    for (std::uint64_t m : masks_of_degree(lc.n, 3)) {
        int a = std::countr_zero(m);
        std::uint64_t rest = m & (m - 1);
        int b = std::countr_zero(rest);
        int c = std::countr_zero(rest & (rest - 1));
        std::uint64_t bits = m;
        p.linear_columns.push_back({{row_of.at(bits & ~(std::uint64_t{1} << a)), a, 1},
                                    {row_of.at(bits & ~(std::uint64_t{1} << b)), b, -1},
                                    {row_of.at(bits & ~(std::uint64_t{1} << c)), c, 1}});
    }
    return p;
}

AlexanderInvariant::AlexanderInvariant(LineCombinatorics lc)
    : lc_(std::move(lc)), pres_(build_delta_lin(lc_)) {
    if (pres_.generators == 0) {
        c_ = 0;
        return;
    }
    SparseMatrix alpha(pres_.generators, static_cast<int>(pres_.constant_columns.size()));
    for (std::size_t j = 0; j < pres_.constant_columns.size(); ++j)
        for (const auto& [row, val] : pres_.constant_columns[j])
            alpha.set(row, static_cast<int>(j), val);
    alpha.finalize();
    exactla::QElimResult elim = exactla::q_eliminate(alpha, true);
    if (elim.rank != pres_.constant_columns.size())
        throw InvariantError("constant relation block is not injective");
    const auto& q = *elim.quotient;
    c_ = pres_.generators - static_cast<int>(elim.rank);

    std::vector<std::vector<std::pair<int, Rational>>> raw(
        static_cast<std::size_t>(pres_.generators));
    std::vector<Rational> scratch(static_cast<std::size_t>(c_), Rational(0));
    QOps ops;
    for (int pmono = 0; pmono < pres_.generators; ++pmono) {
        std::vector<std::pair<std::uint32_t, Rational>> unit{
            {static_cast<std::uint32_t>(pmono), Rational(1)}};
        for (auto& [f, v] : q.reduce(unit, ops, scratch))
            raw[static_cast<std::size_t>(pmono)].emplace_back(static_cast<int>(f), v);
    }
    std::vector<Int> scale(static_cast<std::size_t>(c_), Int(1));
    for (const auto& vec : raw)
        for (const auto& [f, v] : vec)
            mpz_lcm(scale[static_cast<std::size_t>(f)].get_mpz_t(),
                    scale[static_cast<std::size_t>(f)].get_mpz_t(),
                    v.get_den().get_mpz_t());
    qcoords_.resize(raw.size());
    for (std::size_t p = 0; p < raw.size(); ++p)
        for (const auto& [f, v] : raw[p]) {
            Rational scaled = v * Rational(scale[static_cast<std::size_t>(f)]);
            qcoords_[p].emplace_back(f, to_i64(scaled.get_num()));
        }
}

const MonomialBasis& AlexanderInvariant::s_basis(int d) const {
    auto it = s_bases_.find(d);
    if (it == s_bases_.end()) it = s_bases_.emplace(d, MonomialBasis(lc_.n, d)).first;
    return it->second;
}

IntColumns AlexanderInvariant::reduced_koszul(int k) const {
    if (k < 2) throw InputError("the invariant starts in degree 2");
    IntColumns out;
    const MonomialBasis& target = s_basis(k - 2);
    out.rows = static_cast<std::uint32_t>(c_) * static_cast<std::uint32_t>(target.size());
    if (k == 2 || c_ == 0) return out;
    const MonomialBasis& source = s_basis(k - 3);
    for (const auto& terms : pres_.linear_columns) {
        for (int mu = 0; mu < source.size(); ++mu) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> col;
            for (const LinearTerm& t : terms) {
                int nu = target.index(MonomialBasis::multiply(
                    source.codes[static_cast<std::size_t>(mu)], k - 3, t.var));
                for (const auto& [f, iv] : qcoords_[static_cast<std::size_t>(t.row)])
                    col.emplace_back(static_cast<std::uint32_t>(nu) * static_cast<std::uint32_t>(c_) +
                                         static_cast<std::uint32_t>(f),
                                     t.coeff * iv);
            }
            std::sort(col.begin(), col.end());
            out.cols.push_back(std::move(col));
        }
    }
    return out;
}

int AlexanderInvariant::hilbert(int k, const RankStrategy& strategy) const {
    if (k < 2) throw InputError("the invariant starts in degree 2");
    if (pres_.generators == 0) return 0;
    if (k == 2) return c_;
    if (c_ == 0) return 0;
    IntColumns nk = reduced_koszul(k);
    int rank = static_cast<int>(exactla::rank_columns(nk, strategy));
    int dim = c_ * s_basis(k - 2).size() - rank;
    if (dim < 0) throw InvariantError("negative graded dimension");
    return dim;
}

int AlexanderInvariant::full_matrix_rank(int k, const RankStrategy& strategy) const {
    if (k < 2) throw InputError("the invariant starts in degree 2");
    if (pres_.generators == 0) return 0;
    const MonomialBasis& target = s_basis(k - 2);
    std::int64_t rows = static_cast<std::int64_t>(pres_.generators) * target.size();
    if (rows > 200000) throw ResourceError("full presentation matrix too large; use the reduced route");
    IntColumns m;
    m.rows = static_cast<std::uint32_t>(rows);
    int g = pres_.generators;
    for (const auto& cc : pres_.constant_columns)
        for (int mu = 0; mu < target.size(); ++mu) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> col;
            for (const auto& [row, val] : cc)
                col.emplace_back(static_cast<std::uint32_t>(mu) * static_cast<std::uint32_t>(g) +
                                     static_cast<std::uint32_t>(row),
                                 to_i64(Int(val.get_num())));
            std::sort(col.begin(), col.end());
            m.cols.push_back(std::move(col));
        }
    if (k >= 3) {
        const MonomialBasis& source = s_basis(k - 3);
        for (const auto& terms : pres_.linear_columns)
            for (int mu = 0; mu < source.size(); ++mu) {
                std::vector<std::pair<std::uint32_t, std::int64_t>> col;
                for (const LinearTerm& t : terms) {
                    int nu = target.index(MonomialBasis::multiply(
                        source.codes[static_cast<std::size_t>(mu)], k - 3, t.var));
                    col.emplace_back(static_cast<std::uint32_t>(nu) * static_cast<std::uint32_t>(g) +
                                         static_cast<std::uint32_t>(t.row),
                                     t.coeff);
                }
                std::sort(col.begin(), col.end());
                m.cols.push_back(std::move(col));
            }
    }
    return static_cast<int>(exactla::rank_columns(m, strategy));
}

ChenSequence chen_ranks(const LineCombinatorics& lc, int kmax, const RankStrategy& strategy) {
    if (kmax < 2) throw InputError("kmax must be at least 2");
    AlexanderInvariant inv(lc);
    ChenSequence seq;
    seq.kmax = kmax;
    seq.theta.assign(static_cast<std::size_t>(kmax) + 1, Int(0));
    seq.theta[1] = lc.n;
    for (int k = 2; k <= kmax; ++k)
        seq.theta[static_cast<std::size_t>(k)] = inv.hilbert(k, strategy);
    return seq;
}

Int free_group_chen(int n, int k) {
    if (n < 1 || k < 1) throw InputError("free group rank and degree must be positive");
    if (k == 1) return n;
    return Int(k - 1) * binomial(n + k - 2, k);
}

} // namespace chenranks
