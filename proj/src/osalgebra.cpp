#include "chenranks/osalgebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "chenranks/errors.hpp"
#include "chenranks/rank.hpp"

namespace chenranks {

int wedge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (std::uint64_t rest = b; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(a >> (i + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

ExteriorElement normalized(ExteriorElement x) {
    std::sort(x.begin(), x.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    ExteriorElement out;
    for (auto& [mask, coeff] : x) {
        if (!out.empty() && out.back().first == mask)
            out.back().second += coeff;
        else
            out.emplace_back(mask, coeff);
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    return out;
}

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
    ExteriorElement out;
    for (const auto& [ma, ca] : x)
        for (const auto& [mb, cb] : y) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Rational prod = ca * cb;
            out.emplace_back(ma | mb, s > 0 ? prod : Rational(-prod));
        }
    return normalized(std::move(out));
}

ExteriorElement boundary(std::uint64_t mask) {
    ExteriorElement out;
    int j = 0;
    for (std::uint64_t rest = mask; rest; ++j) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        out.emplace_back(mask & ~(std::uint64_t{1} << i), Rational((j & 1) ? -1 : 1));
    }
    return normalized(std::move(out));
}

OsAlgebra::OsAlgebra(Matroid m) : m_(std::move(m)) {
    if (m_.n < 1 || m_.n > 62) throw InputError("unsupported number of hyperplanes");
    deg_.resize(static_cast<std::size_t>(m_.n) + 2);
    mult_.resize(static_cast<std::size_t>(m_.n) + 2);
}

const OsAlgebra::Degree& OsAlgebra::degree(int d) const {
    static const Degree empty{};
    if (d < 0 || d > m_.n) return empty;
    Degree& D = deg_[static_cast<std::size_t>(d)];
    if (D.built) return D;

    Int count = binomial(m_.n, d);
    if (count > (1 << 20)) throw ResourceError("exterior degree too large to enumerate");
    if (d == 0) {
        D.monomials = {0};
    } else {
        std::uint64_t mask = (std::uint64_t{1} << d) - 1;
        std::uint64_t top = std::uint64_t{1} << m_.n;
        while (mask < top) {
            D.monomials.push_back(mask);
            std::uint64_t c = mask & -mask;
            std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    for (std::size_t i = 0; i < D.monomials.size(); ++i)
        D.index[D.monomials[i]] = static_cast<int>(i);

    // generators e_T wedge boundary(e_C), |T| + |C| - 1 = d
    std::vector<std::vector<Rational>> rows;
    int cols = static_cast<int>(D.monomials.size());
    for (const auto& circuit : m_.circuits) {
        int c = static_cast<int>(circuit.size());
        int t = d + 1 - c;
        if (t < 0) continue;
        std::uint64_t cmask = 0;
        for (int i : circuit) cmask |= std::uint64_t{1} << i;
        ExteriorElement dC = boundary(cmask);
        std::vector<int> outside;
        for (int i = 0; i < m_.n; ++i)
            if (!(cmask >> i & 1)) outside.push_back(i);
        std::vector<int> pick;
        std::function<void(int, int)> rec = [&](int next, int want) {
            if (static_cast<int>(pick.size()) == want) {
                std::uint64_t tmask = 0;
                for (int i : pick) tmask |= std::uint64_t{1} << i;
                if (want == t) {
                    ExteriorElement gen = wedge(ExteriorElement{{tmask, Rational(1)}}, dC);
                    std::vector<Rational> row(static_cast<std::size_t>(cols), Rational(0));
                    for (const auto& [mask, coeff] : gen)
                        row[static_cast<std::size_t>(D.index.at(mask))] = coeff;
                    rows.push_back(std::move(row));
                } else {
                    // T meeting the circuit in one element: the product
                    // collapses to the monomial on C union T
                    std::vector<Rational> row(static_cast<std::size_t>(cols), Rational(0));
                    row[static_cast<std::size_t>(D.index.at(cmask | tmask))] = 1;
                    rows.push_back(std::move(row));
                }
                return;
            }
            int missing = want - static_cast<int>(pick.size());
            for (std::size_t i = static_cast<std::size_t>(next);
                 i + static_cast<std::size_t>(missing) <= outside.size(); ++i) {
                pick.push_back(outside[i]);
                rec(static_cast<int>(i) + 1, want);
                pick.pop_back();
            }
        };
        rec(0, t);
        if (t >= 1) rec(0, t - 1);
    }

    std::vector<int> pivots = exactla::dense_rref(rows);
    D.rank = static_cast<int>(pivots.size());
    D.pivots = pivots;
    D.slot.assign(static_cast<std::size_t>(cols), -1);
    for (std::size_t s = 0; s < pivots.size(); ++s) {
        D.slot[static_cast<std::size_t>(pivots[s])] = static_cast<int>(s);
        std::vector<std::pair<int, Rational>> tail;
        for (int f = 0; f < cols; ++f)
            if (f != pivots[s] && rows[s][static_cast<std::size_t>(f)] != 0)
                tail.emplace_back(f, rows[s][static_cast<std::size_t>(f)]);
        D.tails.push_back(std::move(tail));
    }
    for (int f = 0; f < cols; ++f)
        if (D.slot[static_cast<std::size_t>(f)] < 0) D.complement.push_back(f);
    D.built = true;
    return D;
}

const std::vector<std::uint64_t>& OsAlgebra::monomials(int d) const { return degree(d).monomials; }

int OsAlgebra::monomial_index(int d, std::uint64_t mask) const {
    const Degree& D = degree(d);
    auto it = D.index.find(mask);
    if (it == D.index.end()) throw InputError("monomial of the wrong degree");
    return it->second;
}

int OsAlgebra::ideal_rank(int d) const { return degree(d).rank; }

int OsAlgebra::a_dim(int d) const {
    if (d < 0 || d > m_.n) return 0;
    return static_cast<int>(degree(d).complement.size());
}

std::vector<int> OsAlgebra::a_dims() const {
    std::vector<int> out;
    for (int d = 0; d <= m_.rank; ++d) out.push_back(a_dim(d));
    return out;
}

const std::vector<int>& OsAlgebra::a_basis(int d) const { return degree(d).complement; }

std::vector<Rational> OsAlgebra::reduce(int d,
                                        const std::vector<std::pair<int, Rational>>& v) const {
    const Degree& D = degree(d);
    std::vector<Rational> dense(D.monomials.size(), Rational(0));
    for (const auto& [pos, coeff] : v) dense[static_cast<std::size_t>(pos)] += coeff;
    for (std::size_t s = 0; s < D.pivots.size(); ++s) {
        Rational val = dense[static_cast<std::size_t>(D.pivots[s])];
        if (val == 0) continue;
        for (const auto& [f, c] : D.tails[s]) dense[static_cast<std::size_t>(f)] -= val * c;
    }
    std::vector<Rational> out;
    out.reserve(D.complement.size());
    for (int f : D.complement) out.push_back(dense[static_cast<std::size_t>(f)]);
    return out;
}

std::vector<Rational> OsAlgebra::reduce_element(const ExteriorElement& x, int d) const {
    std::vector<std::pair<int, Rational>> v;
    for (const auto& [mask, coeff] : x) v.emplace_back(monomial_index(d, mask), coeff);
    return reduce(d, v);
}

bool OsAlgebra::in_ideal(int d, const ExteriorElement& x) const {
    for (const Rational& c : reduce_element(x, d))
        if (c != 0) return false;
    return true;
}

GradedSubspace OsAlgebra::ideal_piece(int d) const {
    const Degree& D = degree(d);
    GradedSubspace out;
    out.degree = d;
    out.ambient_dim = static_cast<int>(D.monomials.size());
    for (std::size_t s = 0; s < D.pivots.size(); ++s) {
        std::vector<Rational> row(D.monomials.size(), Rational(0));
        row[static_cast<std::size_t>(D.pivots[s])] = 1;
        for (const auto& [f, c] : D.tails[s]) row[static_cast<std::size_t>(f)] = c;
        out.basis.push_back(std::move(row));
    }
    return out;
}

const SparseMatrix& OsAlgebra::generator_multiplication(int d, int i) const {
    if (d < 0 || d > m_.n || i < 0 || i >= m_.n) throw InputError("bad multiplication request");
    auto& cache = mult_[static_cast<std::size_t>(d)];
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;

    const Degree& D = degree(d);
    SparseMatrix m(a_dim(d + 1), a_dim(d));
    for (std::size_t j = 0; j < D.complement.size(); ++j) {
        std::uint64_t mask = D.monomials[static_cast<std::size_t>(D.complement[j])];
        std::uint64_t bit = std::uint64_t{1} << i;
        int s = wedge_sign(bit, mask);
        if (s == 0) continue;
        std::vector<Rational> coords =
            reduce(d + 1, {{monomial_index(d + 1, bit | mask), Rational(s)}});
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] != 0) m.set(static_cast<int>(r), static_cast<int>(j), coords[r]);
    }
    m.finalize();
    return cache.emplace(i, std::move(m)).first->second;
}

std::vector<int> a_dims(const Matroid& m) { return OsAlgebra(m).a_dims(); }

GradedSubspace os_ideal_piece(const Matroid& m, int d) { return OsAlgebra(m).ideal_piece(d); }

SparseMatrix multiplication_map(const OsAlgebra& A, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != A.n()) throw InputError("vector has wrong length");
    SparseMatrix m(A.a_dim(2), A.n());
    for (int i = 0; i < A.n(); ++i) {
        ExteriorElement prod;
        for (int j = 0; j < A.n(); ++j) {
            if (j == i || a[static_cast<std::size_t>(j)] == 0) continue;
            std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            prod.emplace_back(mask, i < j ? a[static_cast<std::size_t>(j)]
                                          : -a[static_cast<std::size_t>(j)]);
        }
        std::vector<Rational> coords = A.reduce_element(normalized(std::move(prod)), 2);
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] != 0) m.set(static_cast<int>(r), i, coords[r]);
    }
    m.finalize();
    return m;
}

bool isotropic(const OsAlgebra& A, const std::vector<std::vector<Rational>>& vectors) {
    auto as_element = [&](const std::vector<Rational>& v) {
        ExteriorElement e;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) e.emplace_back(std::uint64_t{1} << i, v[i]);
        return e;
    };
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (!A.in_ideal(2, wedge(as_element(vectors[i]), as_element(vectors[j]))))
                return false;
    return true;
}

} // namespace chenranks
