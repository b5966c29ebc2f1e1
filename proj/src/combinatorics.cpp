#include "chenranks/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "chenranks/errors.hpp"

namespace chenranks {

namespace {

void check_flat(const std::vector<int>& f, int n) {
    if (f.size() < 2) throw InputError("every flat needs at least two hyperplanes");
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] >= n)
            throw InputError("flat entry " + std::to_string(f[i]) + " out of range for n=" +
                             std::to_string(n));
        if (i > 0 && f[i] <= f[i - 1])
            throw InputError("flat entries must be sorted and distinct");
    }
}

Int det3(const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool proportional3(const std::vector<Int>& a, const std::vector<Int>& b) {
    return a[1] * b[2] == a[2] * b[1] && a[0] * b[2] == a[2] * b[0] && a[0] * b[1] == a[1] * b[0];
}

} // namespace

LineCombinatorics make_line_combinatorics(int n, std::vector<std::vector<int>> explicit_flats) {
    if (n < 1) throw InputError("arrangement needs at least one hyperplane");
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const auto& f : explicit_flats) {
        check_flat(f, n);
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) {
                auto& slot = used[static_cast<std::size_t>(f[a])][static_cast<std::size_t>(f[b])];
                if (slot)
                    throw InputError("hyperplanes " + std::to_string(f[a]) + " and " +
                                     std::to_string(f[b]) + " lie in two flats");
                slot = 1;
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!used[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                explicit_flats.push_back({i, j});
    std::sort(explicit_flats.begin(), explicit_flats.end());
    return LineCombinatorics{n, std::move(explicit_flats)};
}

std::vector<std::vector<int>> multiple_points(const LineCombinatorics& lc) {
    std::vector<std::vector<int>> out;
    for (const auto& f : lc.flats)
        if (f.size() >= 3) out.push_back(f);
    return out;
}

std::vector<std::vector<int>> pair_flat_index(const LineCombinatorics& lc) {
    std::vector<std::vector<int>> idx(static_cast<std::size_t>(lc.n),
                                      std::vector<int>(static_cast<std::size_t>(lc.n), -1));
    for (std::size_t fi = 0; fi < lc.flats.size(); ++fi) {
        const auto& f = lc.flats[fi];
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) {
                idx[static_cast<std::size_t>(f[a])][static_cast<std::size_t>(f[b])] = static_cast<int>(fi);
                idx[static_cast<std::size_t>(f[b])][static_cast<std::size_t>(f[a])] = static_cast<int>(fi);
            }
    }
    return idx;
}

int mobius(const LineCombinatorics& lc, const std::vector<int>& flat) {
    if (!std::binary_search(lc.flats.begin(), lc.flats.end(), flat))
        throw InputError("not a flat of this arrangement");
    return static_cast<int>(flat.size()) - 1;
}

LineCombinatorics from_normals(const std::vector<std::vector<Int>>& normals) {
    int n = static_cast<int>(normals.size());
    if (n < 1) throw InputError("arrangement needs at least one hyperplane");
    for (const auto& v : normals) {
        if (v.size() != 3)
            throw InputError("normals must have exactly 3 coordinates; use a graph or an "
                             "explicit flat list for other ranks");
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw InputError("zero normal vector");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (proportional3(normals[static_cast<std::size_t>(i)],
                              normals[static_cast<std::size_t>(j)]))
                throw InputError("normals " + std::to_string(i) + " and " + std::to_string(j) +
                                 " define the same hyperplane");
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<int>> flats;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (used[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            std::vector<int> flat;
            for (int k = 0; k < n; ++k)
                if (det3(normals[static_cast<std::size_t>(i)], normals[static_cast<std::size_t>(j)],
                         normals[static_cast<std::size_t>(k)]) == 0)
                    flat.push_back(k);
            for (std::size_t a = 0; a < flat.size(); ++a)
                for (std::size_t b = a + 1; b < flat.size(); ++b) {
                    used[static_cast<std::size_t>(flat[a])][static_cast<std::size_t>(flat[b])] = 1;
                    used[static_cast<std::size_t>(flat[b])][static_cast<std::size_t>(flat[a])] = 1;
                }
            flats.push_back(std::move(flat));
        }
    return make_line_combinatorics(n, std::move(flats));
}

Matroid matroid_from_line_combinatorics(const LineCombinatorics& lc) {
    Matroid m;
    m.n = lc.n;
    if (lc.n == 1) {
        m.rank = 1;
        return m;
    }
    bool pencil = false;
    for (const auto& f : lc.flats)
        if (static_cast<int>(f.size()) == lc.n) pencil = true;
    if (pencil) {
        m.rank = 2;
        for (int a = 0; a < lc.n; ++a)
            for (int b = a + 1; b < lc.n; ++b)
                for (int c = b + 1; c < lc.n; ++c) m.circuits.push_back({a, b, c});
        return m;
    }
    m.rank = 3;
    auto pf = pair_flat_index(lc);
    auto collinear = [&](int a, int b, int c) {
        const auto& f = lc.flats[static_cast<std::size_t>(pf[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])];
        return std::binary_search(f.begin(), f.end(), c);
    };
    for (const auto& f : lc.flats) {
        if (f.size() < 3) continue;
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b)
                for (std::size_t c = b + 1; c < f.size(); ++c)
                    m.circuits.push_back({f[a], f[b], f[c]});
    }
    for (int a = 0; a < lc.n; ++a)
        for (int b = a + 1; b < lc.n; ++b)
            for (int c = b + 1; c < lc.n; ++c)
                for (int d = c + 1; d < lc.n; ++d) {
                    if (collinear(a, b, c) || collinear(a, b, d) || collinear(a, c, d) ||
                        collinear(b, c, d))
                        continue;
                    m.circuits.push_back({a, b, c, d});
                }
    std::sort(m.circuits.begin(), m.circuits.end());
    return m;
}

GraphicArrangement graphic(const Graph& g) {
    int V = g.vertices;
    if (V < 1) throw InputError("graph needs at least one vertex");
    int n = static_cast<int>(g.edges.size());
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(V),
                                       std::vector<char>(static_cast<std::size_t>(V), 0));
    for (int e = 0; e < n; ++e) {
        auto [a, b] = g.edges[static_cast<std::size_t>(e)];
        if (a < 0 || a >= V || b < 0 || b >= V) throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("loops are not allowed");
        auto key = std::minmax(a, b);
        if (!edge_index.emplace(key, e).second) throw InputError("duplicate edge");
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    }
    if (n < 1) throw InputError("graph needs at least one edge");

    std::vector<std::vector<int>> triangles;
    for (int a = 0; a < V; ++a)
        for (int b = a + 1; b < V; ++b) {
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            for (int c = b + 1; c < V; ++c) {
                if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] ||
                    !adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                    continue;
                std::vector<int> f = {edge_index.at({a, b}), edge_index.at({a, c}),
                                      edge_index.at({b, c})};
                std::sort(f.begin(), f.end());
                triangles.push_back(std::move(f));
            }
        }

    GraphicArrangement out;
    out.lc = make_line_combinatorics(n, std::move(triangles));

    // rank = vertices - connected components
    std::vector<int> parent(static_cast<std::size_t>(V));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = V;
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    }
    out.matroid.n = n;
    out.matroid.rank = V - components;

    // circuits: simple cycles, each found once from its smallest vertex with
    // the orientation fixed by path[1] < path.back()
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(V), 0);
    std::function<void(int)> dfs = [&](int v) {
        int s = path.front();
        for (int w = 0; w < V; ++w) {
            if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                std::vector<int> circuit;
                for (std::size_t i = 0; i < path.size(); ++i) {
                    int x = path[i];
                    int y = path[(i + 1) % path.size()];
                    circuit.push_back(edge_index.at(std::minmax(x, y)));
                }
                std::sort(circuit.begin(), circuit.end());
                out.matroid.circuits.push_back(std::move(circuit));
            } else if (w > s && !on_path[static_cast<std::size_t>(w)]) {
                path.push_back(w);
                on_path[static_cast<std::size_t>(w)] = 1;
                dfs(w);
                on_path[static_cast<std::size_t>(w)] = 0;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < V; ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.matroid.circuits.begin(), out.matroid.circuits.end());

    // clique counts by extension with vertices above the current maximum
    out.kappa.assign(static_cast<std::size_t>(V), 0);
    out.kappa[0] = V;
    std::vector<int> clique;
    std::function<void(int)> extend = [&](int last) {
        for (int w = last + 1; w < V; ++w) {
            bool ok = true;
            for (int u : clique)
                if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(w);
            if (clique.size() >= 2) ++out.kappa[clique.size() - 1];
            extend(w);
            clique.pop_back();
        }
    };
    extend(-1);
    return out;
}

std::vector<std::vector<int>> induced_flats(const LineCombinatorics& lc,
                                            const std::vector<int>& subset) {
    std::vector<std::vector<int>> out;
    for (const auto& f : lc.flats) {
        std::vector<int> cut;
        std::set_intersection(f.begin(), f.end(), subset.begin(), subset.end(),
                              std::back_inserter(cut));
        if (cut.size() >= 2) out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_subarrangement(
    const LineCombinatorics& lc, int min_size, int max_size,
    const std::function<void(const std::vector<int>&, const std::vector<std::vector<int>>&)>& fn) {
    if (min_size < 3) throw InputError("sub-arrangements of fewer than 3 hyperplanes are trivial");
    max_size = std::min(max_size, lc.n);
    std::vector<int> subset;
    std::function<void(int, int)> rec = [&](int next, int want) {
        if (static_cast<int>(subset.size()) == want) {
            fn(subset, induced_flats(lc, subset));
            return;
        }
        int missing = want - static_cast<int>(subset.size());
        for (int i = next; i + missing <= lc.n; ++i) {
            subset.push_back(i);
            rec(i + 1, want);
            subset.pop_back();
        }
    };
    for (int size = min_size; size <= max_size; ++size) rec(0, size);
}

LineCombinatorics relabel(const LineCombinatorics& lc, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != lc.n) throw InputError("permutation has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(lc.n), 0);
    for (int p : perm) {
        if (p < 0 || p >= lc.n || seen[static_cast<std::size_t>(p)])
            throw InputError("not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<std::vector<int>> flats;
    for (const auto& f : lc.flats) {
        std::vector<int> nf;
        for (int x : f) nf.push_back(perm[static_cast<std::size_t>(x)]);
        std::sort(nf.begin(), nf.end());
        flats.push_back(std::move(nf));
    }
    std::sort(flats.begin(), flats.end());
    return LineCombinatorics{lc.n, std::move(flats)};
}

} // namespace chenranks
