#include "chenranks/resonance.hpp"

#include <algorithm>

#include "chenranks/errors.hpp"
#include "chenranks/rank.hpp"

namespace chenranks {

using exactla::RankMode;
using exactla::RankStrategy;
using exactla::SparseMatrix;

namespace {

void validate_partition(const Partition& p) {
    if (!std::is_sorted(p.ground.begin(), p.ground.end()) ||
        std::adjacent_find(p.ground.begin(), p.ground.end()) != p.ground.end())
        throw InputError("partition ground set must be sorted and duplicate-free");
    std::vector<int> seen;
    for (const auto& b : p.blocks) {
        if (b.empty()) throw InputError("partition block is empty");
        seen.insert(seen.end(), b.begin(), b.end());
    }
    std::sort(seen.begin(), seen.end());
    if (seen != p.ground) throw InputError("partition blocks do not cover the ground set exactly");
}

bool neighborly_impl(const std::vector<std::vector<int>>& flats, const Partition& p,
                     bool skip_doubles) {
    validate_partition(p);
    for (const auto& y : flats) {
        if (skip_doubles && y.size() < 3) continue;
        int mu = static_cast<int>(y.size()) - 1;
        for (const auto& block : p.blocks) {
            int common = 0;
            for (int i : y)
                if (std::find(block.begin(), block.end(), i) != block.end()) ++common;
            if (mu <= common && common < static_cast<int>(y.size())) return false;
        }
    }
    return true;
}

std::vector<std::vector<Rational>> span_union_rref(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> rows = a;
    rows.insert(rows.end(), b.begin(), b.end());
    return exactla::rref_canonical(rows);
}

bool contained_in(const std::vector<std::vector<Rational>>& inner,
                  const std::vector<std::vector<Rational>>& outer) {
    return span_union_rref(outer, inner).size() == outer.size();
}

// N(L) = {v : v ^ w in I_2 for every w in the basis of L}; replaces L when the
// enlargement is still isotropic and strictly bigger, iterating to a fixed
// point.
std::vector<std::vector<Rational>> enlarge(const OsAlgebra& algebra,
                                           std::vector<std::vector<Rational>> basis) {
    int n = algebra.n();
    for (;;) {
        int block_rows = algebra.a_dim(2);
        SparseMatrix stacked(static_cast<int>(basis.size()) * block_rows, n);
        for (std::size_t w = 0; w < basis.size(); ++w) {
            SparseMatrix mw = multiplication_map(algebra, basis[w]);
            for (int c = 0; c < mw.cols; ++c)
                for (const auto& [r, v] : mw.col[static_cast<std::size_t>(c)])
                    stacked.set(static_cast<int>(w) * block_rows + static_cast<int>(r), c, v);
        }
        stacked.finalize();
        std::vector<std::vector<Rational>> bigger = exactla::kernel_basis(stacked);
        if (bigger.size() <= basis.size() || !isotropic(algebra, bigger)) return basis;
        basis = std::move(bigger);
    }
}

bool basis_less(const std::vector<std::vector<Rational>>& a,
                const std::vector<std::vector<Rational>>& b) {
    return a < b; // lexicographic on canonical rref rows
}

} // namespace

bool is_resonant(const OsAlgebra& algebra, const std::vector<Rational>& a) {
    if (static_cast<int>(a.size()) != algebra.n())
        throw InputError("resonance point has the wrong length");
    bool zero = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
    if (zero) throw InputError("resonance is tested at nonzero points only");
    SparseMatrix m = multiplication_map(algebra, a);
    RankStrategy exact{RankMode::exact, 0, std::nullopt};
    return algebra.n() - exactla::rank(m, exact) >= 2;
}

bool is_resonant(const Matroid& m, const std::vector<Rational>& a) {
    OsAlgebra algebra(m);
    return is_resonant(algebra, a);
}

std::vector<ResonanceComponent> local_components(const LineCombinatorics& lc) {
    std::vector<ResonanceComponent> out;
    for (const auto& y : lc.flats) {
        if (y.size() < 3) continue;
        std::vector<std::vector<Rational>> vecs;
        for (std::size_t i = 1; i < y.size(); ++i) {
            std::vector<Rational> v(static_cast<std::size_t>(lc.n), Rational(0));
            v[static_cast<std::size_t>(y[0])] = -1;
            v[static_cast<std::size_t>(y[i])] = 1;
            vecs.push_back(std::move(v));
        }
        ResonanceComponent comp;
        comp.basis = exactla::rref_canonical(vecs);
        comp.projective_dimension = static_cast<int>(y.size()) - 2;
        comp.kind = ComponentKind::local;
        comp.flat = y;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_neighborly(const std::vector<std::vector<int>>& flats, const Partition& p) {
    return neighborly_impl(flats, p, false);
}

bool is_neighborly(const LineCombinatorics& lc, const Partition& p) {
    if (static_cast<int>(p.ground.size()) == lc.n) return neighborly_impl(lc.flats, p, false);
    return neighborly_impl(induced_flats(lc, p.ground), p, false);
}

bool is_almost_neighborly(const std::vector<std::vector<int>>& flats, const Partition& p) {
    return neighborly_impl(flats, p, true);
}

bool is_almost_neighborly(const LineCombinatorics& lc, const Partition& p) {
    if (static_cast<int>(p.ground.size()) == lc.n) return neighborly_impl(lc.flats, p, true);
    return neighborly_impl(induced_flats(lc, p.ground), p, true);
}

std::optional<std::vector<std::vector<Rational>>>
candidate_subspace(const LineCombinatorics& lc, const std::vector<int>& subset,
                   const Partition& p) {
    if (p.ground != subset) throw InputError("partition ground set must equal the subset");
    validate_partition(p);
    if (p.blocks.size() < 2) throw InputError("partition needs at least two blocks");

    std::vector<char> in_subset(static_cast<std::size_t>(lc.n), 0);
    for (int i : subset) {
        if (i < 0 || i >= lc.n) throw InputError("subset element out of range");
        in_subset[static_cast<std::size_t>(i)] = 1;
    }
    std::vector<int> block_of(static_cast<std::size_t>(lc.n), -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int i : p.blocks[b]) block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);

    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (int i = 0; i < lc.n; ++i)
        if (!in_subset[static_cast<std::size_t>(i)]) rows.push_back({{i, Rational(1)}});
    for (const auto& block : p.blocks)
        for (std::size_t j = 1; j < block.size(); ++j)
            rows.push_back({{block[0], Rational(-1)}, {block[j], Rational(1)}});
    for (const auto& y : lc.flats) {
        std::vector<int> t;
        for (int i : y)
            if (in_subset[static_cast<std::size_t>(i)]) t.push_back(i);
        if (t.size() < 2) continue;
        bool one_block = true;
        for (int i : t)
            if (block_of[static_cast<std::size_t>(i)] != block_of[static_cast<std::size_t>(t[0])])
                one_block = false;
        if (one_block) continue;
        std::vector<std::pair<int, Rational>> row;
        for (int i : t) row.emplace_back(i, Rational(1));
        rows.push_back(std::move(row));
    }

    SparseMatrix m(static_cast<int>(rows.size()), lc.n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m.set(static_cast<int>(r), c, v);
    m.finalize();
    std::vector<std::vector<Rational>> basis = exactla::kernel_basis(m);
    if (basis.size() < 2) return std::nullopt;
    return basis;
}

ComponentSearch enumerate_components(const LineCombinatorics& lc, const Matroid& m,
                                     const SearchLimits& limits) {
    if (m.n != lc.n) throw InputError("matroid and combinatorics disagree on the line count");
    OsAlgebra algebra(m);
    bool truncated = false;
    int max_subset = limits.max_subset < 0 ? lc.n : std::min(lc.n, limits.max_subset);
    if (max_subset < lc.n) truncated = true;
    if (limits.max_blocks < 3) throw InputError("block cap below three finds no partitions");

    std::vector<ResonanceComponent> found = local_components(lc);
    for (auto& comp : found) {
        if (!isotropic(algebra, comp.basis))
            throw InvariantError("local component failed the isotropy certificate");
        comp.verified = true;
    }

    for_each_subarrangement(
        lc, 3, max_subset,
        [&](const std::vector<int>& subset, const std::vector<std::vector<int>>& induced) {
            int s = static_cast<int>(subset.size());
            if (s > limits.max_blocks) {
                // a neighborly partition must keep every induced double inside
                // one block, so the block count is at most the number of
                // classes under merging along doubles; only a cap below that
                // skips anything
                std::vector<int> parent(static_cast<std::size_t>(s));
                for (int i = 0; i < s; ++i) parent[static_cast<std::size_t>(i)] = i;
                std::function<int(int)> find = [&](int x) {
                    while (parent[static_cast<std::size_t>(x)] != x)
                        x = parent[static_cast<std::size_t>(x)] =
                            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                    return x;
                };
                for (const auto& y : induced)
                    if (y.size() == 2) {
                        auto pos = [&](int v) {
                            return static_cast<int>(std::lower_bound(subset.begin(), subset.end(),
                                                                     v) -
                                                    subset.begin());
                        };
                        parent[static_cast<std::size_t>(find(pos(y[0])))] = find(pos(y[1]));
                    }
                int classes = 0;
                for (int i = 0; i < s; ++i)
                    if (find(i) == i) ++classes;
                if (classes > limits.max_blocks) truncated = true;
            }
            // restricted-growth enumeration: block = index of first occurrence,
            // which is exactly the canonical block ordering
            std::vector<int> assign(static_cast<std::size_t>(s), 0);
            std::function<void(int, int)> rec = [&](int i, int used) {
                if (i == s) {
                    if (used < 3) return;
                    Partition p;
                    p.ground = subset;
                    p.blocks.assign(static_cast<std::size_t>(used), {});
                    for (int j = 0; j < s; ++j)
                        p.blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])]
                            .push_back(subset[static_cast<std::size_t>(j)]);
                    if (!neighborly_impl(induced, p, false)) return;
                    auto cand = candidate_subspace(lc, subset, p);
                    if (!cand) return;
                    if (!isotropic(algebra, *cand)) return;
                    ResonanceComponent comp;
                    comp.basis = enlarge(algebra, std::move(*cand));
                    comp.projective_dimension = static_cast<int>(comp.basis.size()) - 1;
                    comp.kind = ComponentKind::essential;
                    comp.subarrangement = subset;
                    comp.partition_blocks = p.blocks;
                    comp.verified = true;
                    found.push_back(std::move(comp));
                    return;
                }
                int cap = std::min(used, limits.max_blocks - 1);
                for (int b = 0; b <= cap; ++b) {
                    assign[static_cast<std::size_t>(i)] = b;
                    rec(i + 1, std::max(used, b + 1));
                }
            };
            rec(0, 0);
        });

    // deduplicate on the canonical basis; locals were pushed first and win
    std::sort(found.begin(), found.end(), [](const ResonanceComponent& a,
                                             const ResonanceComponent& b) {
        if (a.basis != b.basis) return basis_less(a.basis, b.basis);
        return a.kind < b.kind;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const ResonanceComponent& a, const ResonanceComponent& b) {
                                return a.basis == b.basis;
                            }),
                found.end());

    // drop subspaces strictly contained in another component
    std::stable_sort(found.begin(), found.end(),
                     [](const ResonanceComponent& a, const ResonanceComponent& b) {
                         return a.basis.size() > b.basis.size();
                     });
    std::vector<ResonanceComponent> kept;
    for (auto& comp : found) {
        bool redundant = false;
        for (const auto& k : kept)
            if (contained_in(comp.basis, k.basis)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(comp));
    }

    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (span_union_rref(kept[i].basis, kept[j].basis).size() !=
                kept[i].basis.size() + kept[j].basis.size())
                throw InvariantError("resonance components intersect nontrivially");

    std::sort(kept.begin(), kept.end(), [](const ResonanceComponent& a,
                                           const ResonanceComponent& b) {
        return basis_less(a.basis, b.basis);
    });

    ComponentSearch out;
    out.components = std::move(kept);
    for (const auto& comp : out.components) ++out.h.h[comp.projective_dimension];
    out.complete = !truncated;
    return out;
}

Int conjecture_rhs(const HVector& h, int k) {
    if (k < 2) throw InputError("the conjectured formula applies from degree 2");
    Int sum = 0;
    for (const auto& [r, count] : h.h) {
        if (r < 1) throw InputError("h-vector entries start at projective dimension 1");
        sum += Int(static_cast<long>(count)) * binomial(r + k - 1, k);
    }
    return Int(k - 1) * sum;
}

Int bp_hilbert(int r, int k) {
    if (r < 1 || k < 2) throw InputError("bp_hilbert needs r >= 1 and k >= 2");
    return Int(k - 1) * binomial(r + k - 1, k);
}

LowerBoundReport lower_bound_check(const ChenSequence& theta, const HVector& h, int k_min,
                                   int k_max) {
    if (k_min < 2 || k_min > k_max) throw InputError("bad degree range");
    if (k_max > theta.kmax) throw InputError("Chen ranks not computed far enough");
    LowerBoundReport report;
    report.k_min = k_min;
    report.k_max = k_max;
    for (int k = k_min; k <= k_max; ++k)
        report.difference.push_back(theta.theta[static_cast<std::size_t>(k)] -
                                    conjecture_rhs(h, k));
    int stab = -1;
    for (int i = static_cast<int>(report.difference.size()) - 1; i >= 0; --i) {
        if (report.difference[static_cast<std::size_t>(i)] < 0) break;
        stab = k_min + i;
    }
    if (stab < 0)
        throw InvariantError("Chen ranks fall below the resonance lower bound at the top of the range");
    report.stabilization = stab;
    return report;
}

} // namespace chenranks
