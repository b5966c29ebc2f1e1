#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chenranks/analysis.hpp"
#include "chenranks/errors.hpp"
#include "chenranks/examples.hpp"
#include "chenranks/polyfit.hpp"

namespace chenranks {

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, int k) {
    Rational acc(0);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * k + *it;
    return acc;
}

namespace {

// monomial coefficients of the interpolating polynomial through (xs[i], ys[i])
std::vector<Rational> interpolate(const std::vector<int>& xs, const std::vector<Rational>& ys) {
    std::size_t m = xs.size();
    std::vector<Rational> dd = ys; // divided differences, in place
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    std::vector<Rational> c{dd[m - 1]};
    for (std::size_t i = m - 1; i-- > 0;) {
        // c <- c * (x - xs[i]) + dd[i]
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t + 1] += c[t];
            next[t] -= c[t] * xs[i];
        }
        next[0] += dd[i];
        c = std::move(next);
    }
    return c;
}

} // namespace

PolynomialFit fit_hilbert_polynomial(const ChenSequence& theta, int k_min) {
    if (k_min < 1 || k_min > theta.kmax)
        throw InputError("polynomial fit needs a degree range inside the computed Chen ranks");
    int kmax = theta.kmax;
    for (int d = 0; d <= kmax - k_min - 1; ++d) {
        for (int k0 = k_min; k0 + d + 1 <= kmax; ++k0) {
            std::vector<int> xs;
            std::vector<Rational> ys;
            for (int k = k0; k <= k0 + d; ++k) {
                xs.push_back(k);
                ys.emplace_back(theta.theta[static_cast<std::size_t>(k)]);
            }
            std::vector<Rational> coeff = interpolate(xs, ys);
            bool matched = true;
            for (int k = k0 + d + 1; k <= kmax; ++k)
                if (evaluate_polynomial(coeff, k) !=
                    Rational(theta.theta[static_cast<std::size_t>(k)])) {
                    matched = false;
                    break;
                }
            if (!matched) continue;
            while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
            PolynomialFit fit;
            fit.stabilization = k0;
            if (!coeff.empty()) {
                fit.degree = static_cast<int>(coeff.size()) - 1;
                fit.coefficients = std::move(coeff);
            }
            return fit;
        }
    }
    throw InputError("the Chen range is too short for a stable polynomial fit");
}

// ---------------------------------------------------------------------------
// input parsing

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(path + "." + key + ": required field is missing");
    return *it;
}

long long require_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
    return v.get<long long>();
}

std::vector<std::vector<int>> require_int_lists(const json& v, const std::string& path) {
    if (!v.is_array()) throw InputError(path + ": expected an array");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& inner = v[i];
        std::string ipath = path + "[" + std::to_string(i) + "]";
        if (!inner.is_array()) throw InputError(ipath + ": expected an array");
        std::vector<int> row;
        for (std::size_t j = 0; j < inner.size(); ++j)
            row.push_back(static_cast<int>(
                require_int(inner[j], ipath + "[" + std::to_string(j) + "]")));
        out.push_back(std::move(row));
    }
    return out;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) known = true;
        if (!known) throw InputError(path + "." + key + ": unknown field");
    }
}

} // namespace

ArrangementInput parse_input(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw InputError("$: expected an object");
    const json& name = require_field(root, "$", "name");
    if (!name.is_string()) throw InputError("$.name: expected a string");
    const json& kind = require_field(root, "$", "kind");
    if (!kind.is_string()) throw InputError("$.kind: expected a string");

    ArrangementInput input;
    input.name = name.get<std::string>();
    input.kind = kind.get<std::string>();
    if (input.kind == "normals") {
        reject_unknown_keys(root, "$", {"name", "kind", "normals"});
        const json& normals = require_field(root, "$", "normals");
        std::vector<std::vector<Int>> rows;
        for (const auto& r : require_int_lists(normals, "$.normals")) {
            std::vector<Int> row;
            for (int v : r) row.emplace_back(v);
            rows.push_back(std::move(row));
        }
        input.lc = from_normals(rows);
        input.matroid = matroid_from_line_combinatorics(input.lc);
    } else if (input.kind == "line-combinatorics") {
        reject_unknown_keys(root, "$", {"name", "kind", "n", "flats"});
        int n = static_cast<int>(require_int(require_field(root, "$", "n"), "$.n"));
        auto flats = require_int_lists(require_field(root, "$", "flats"), "$.flats");
        std::vector<std::vector<int>> multiple;
        for (auto& f : flats) multiple.push_back(std::move(f));
        input.lc = make_line_combinatorics(n, std::move(multiple));
        input.matroid = matroid_from_line_combinatorics(input.lc);
    } else if (input.kind == "graph") {
        reject_unknown_keys(root, "$", {"name", "kind", "graph"});
        const json& graph = require_field(root, "$", "graph");
        if (!graph.is_object()) throw InputError("$.graph: expected an object");
        reject_unknown_keys(graph, "$.graph", {"vertices", "edges"});
        Graph g;
        g.vertices =
            static_cast<int>(require_int(require_field(graph, "$.graph", "vertices"),
                                         "$.graph.vertices"));
        auto edges = require_int_lists(require_field(graph, "$.graph", "edges"), "$.graph.edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].size() != 2)
                throw InputError("$.graph.edges[" + std::to_string(i) +
                                 "]: expected a pair of vertices");
            g.edges.emplace_back(edges[i][0], edges[i][1]);
        }
        GraphicArrangement ga = graphic(g);
        input.lc = std::move(ga.lc);
        input.matroid = std::move(ga.matroid);
    } else {
        throw InputError("$.kind: must be one of \"normals\", \"line-combinatorics\", \"graph\"");
    }
    return input;
}

// ---------------------------------------------------------------------------
// example registry

std::vector<ExampleEntry> list_examples() {
    return {
        {"braid", "six planes of the rank-3 braid arrangement (the complete graph on 4 vertices)"},
        {"pencil(m)", "m lines through one point"},
        {"near-pencil(m)", "m-1 lines through one point plus a line in general position"},
        {"generic(n)", "n lines in general position"},
        {"complete-graph(v)", "graphic arrangement of the complete graph on v vertices"},
        {"ceva3", "nine lines realizing the affine plane over Z/3"},
        {"maclane", "the eight-line MacLane arrangement"},
        {"deleted-maclane", "MacLane with its first triple point broken up"},
    };
}

namespace {

ArrangementInput lc_input(std::string name, LineCombinatorics lc) {
    ArrangementInput input;
    input.name = std::move(name);
    input.kind = "line-combinatorics";
    input.matroid = matroid_from_line_combinatorics(lc);
    input.lc = std::move(lc);
    return input;
}

bool parse_parameter(const std::string& name, const std::string& base, int& value) {
    if (name.size() < base.size() + 3 || name.compare(0, base.size(), base) != 0 ||
        name[base.size()] != '(' || name.back() != ')')
        return false;
    std::string digits = name.substr(base.size() + 1, name.size() - base.size() - 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("example parameter in \"" + name + "\" must be a positive integer");
    if (digits.size() > 6) throw InputError("example parameter in \"" + name + "\" is too large");
    value = std::stoi(digits);
    return true;
}

} // namespace

ArrangementInput example_input(const std::string& name) {
    if (name == "braid") {
        ArrangementInput input;
        input.name = name;
        input.kind = "normals";
        input.lc = examples::braid_lc();
        input.matroid = matroid_from_line_combinatorics(input.lc);
        return input;
    }
    if (name == "ceva3") return lc_input(name, examples::ceva3_lc());
    if (name == "maclane") return lc_input(name, examples::maclane_lc());
    if (name == "deleted-maclane") return lc_input(name, examples::deleted_maclane_lc());
    int m = 0;
    if (parse_parameter(name, "pencil", m)) return lc_input(name, examples::pencil_lc(m));
    if (parse_parameter(name, "near-pencil", m)) return lc_input(name, examples::near_pencil_lc(m));
    if (parse_parameter(name, "generic", m)) return lc_input(name, examples::generic_lc(m));
    if (parse_parameter(name, "complete-graph", m)) {
        GraphicArrangement ga = graphic(examples::complete_graph(m));
        ArrangementInput input;
        input.name = name;
        input.kind = "graph";
        input.lc = std::move(ga.lc);
        input.matroid = std::move(ga.matroid);
        return input;
    }
    throw InputError("unknown example \"" + name + "\"; see --list-examples");
}

// ---------------------------------------------------------------------------
// orchestration

AnalysisReport analyze(const ArrangementInput& input, const AnalyzeOptions& options) {
    using Clock = std::chrono::steady_clock;
    AnalysisReport report;
    report.input = input;
    report.options = options;
    auto timed = [&](const char* phase, auto&& fn) {
        Clock::time_point start = Clock::now();
        fn();
        report.timings.emplace_back(phase,
                                    std::chrono::duration<double>(Clock::now() - start).count());
    };

    timed("chen_ranks", [&] {
        report.theta = chen_ranks(input.lc, options.kmax, options.strategy);
    });
    timed("resonance", [&] {
        report.resonance = enumerate_components(input.lc, input.matroid, options.limits);
    });
    timed("conjecture", [&] {
        for (int k = 2; k <= options.kmax; ++k) {
            ConjectureRow row;
            row.k = k;
            row.theta = report.theta.theta[static_cast<std::size_t>(k)];
            row.rhs = conjecture_rhs(report.resonance.h, k);
            row.difference = row.theta - row.rhs;
            report.conjecture.push_back(row);
        }
        report.lower_bound = lower_bound_check(report.theta, report.resonance.h, 2, options.kmax);
    });
    timed("fit", [&] { report.fit = fit_hilbert_polynomial(report.theta); });
    timed("betti", [&] {
        report.betti = betti_table(input.matroid, options.imax, options.strategy);
        report.cross_checked_through = std::min(options.kmax, options.imax + 1);
        cross_check_chen(report.theta, report.betti, report.cross_checked_through);
    });
    timed("epy", [&] {
        report.epy_exact = epy_exactness(input.matroid, options.epy_bound, options.strategy);
        if (!report.epy_exact)
            throw InvariantError("the strand resolution failed its exactness certificate");
    });
    timed("torsion", [&] {
        AlexanderInvariant invariant(input.lc);
        int k_hi = std::min(options.kmax, std::max(2, report.fit.stabilization));
        report.torsion = torsion_table(invariant, report.resonance.h, 2, k_hi,
                                       options.torsion_window, options.strategy);
    });
    timed("complexity", [&] {
        report.complexity =
            complexity_report(input.matroid, input.lc, report.resonance.h, report.theta);
    });
    return report;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

const char* mode_name(exactla::RankMode mode) {
    switch (mode) {
    case exactla::RankMode::exact:
        return "exact";
    case exactla::RankMode::modular:
        return "modular";
    case exactla::RankMode::verify:
        return "verify";
    }
    return "unknown";
}

json basis_json(const std::vector<std::vector<Rational>>& basis) {
    json rows = json::array();
    for (const auto& row : basis) {
        json r = json::array();
        for (const Rational& v : row) r.push_back(rational_to_string(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

std::string report_json(const AnalysisReport& report, bool include_timings) {
    json root;

    root["input"]["name"] = report.input.name;
    root["input"]["kind"] = report.input.kind;
    root["input"]["n"] = report.input.lc.n;
    root["input"]["rank"] = report.input.matroid.rank;
    root["input"]["flats"] = report.input.lc.flats;

    root["strategy"]["mode"] = mode_name(report.options.strategy.mode);
    root["strategy"]["seed"] = report.options.strategy.seed;

    root["options"]["kmax"] = report.options.kmax;
    root["options"]["imax"] = report.options.imax;
    root["options"]["torsion_window"] = report.options.torsion_window;
    root["options"]["epy_bound"] = report.options.epy_bound;
    root["options"]["search_cap"]["max_subset"] = report.options.limits.max_subset;
    root["options"]["search_cap"]["max_blocks"] = report.options.limits.max_blocks;

    json theta = json::array();
    for (int k = 1; k <= report.theta.kmax; ++k)
        theta.push_back(to_i64(report.theta.theta[static_cast<std::size_t>(k)]));
    root["theta"] = std::move(theta);

    json betti = json::array();
    for (const auto& [key, value] : report.betti.beta) {
        json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        entry["value"] = value;
        betti.push_back(std::move(entry));
    }
    root["betti"]["imax"] = report.betti.imax;
    root["betti"]["rank"] = report.betti.rank;
    root["betti"]["entries"] = std::move(betti);
    root["betti"]["cross_checked_through"] = report.cross_checked_through;

    root["resonance"]["complete"] = report.resonance.complete;
    json h = json::object();
    for (const auto& [r, count] : report.resonance.h.h) h[std::to_string(r)] = count;
    root["resonance"]["h"] = std::move(h);
    json components = json::array();
    for (const ResonanceComponent& comp : report.resonance.components) {
        json c;
        c["kind"] = comp.kind == ComponentKind::local ? "local" : "essential";
        c["projective_dimension"] = comp.projective_dimension;
        c["verified"] = comp.verified;
        c["basis"] = basis_json(comp.basis);
        if (comp.kind == ComponentKind::local) {
            c["flat"] = comp.flat;
        } else {
            c["subarrangement"] = comp.subarrangement;
            c["partition"] = comp.partition_blocks;
        }
        components.push_back(std::move(c));
    }
    root["resonance"]["components"] = std::move(components);

    json conjecture = json::array();
    for (const ConjectureRow& row : report.conjecture) {
        json r;
        r["k"] = row.k;
        r["theta"] = to_i64(row.theta);
        r["rhs"] = to_i64(row.rhs);
        r["difference"] = to_i64(row.difference);
        conjecture.push_back(std::move(r));
    }
    root["conjecture"] = std::move(conjecture);

    root["lower_bound"]["k_min"] = report.lower_bound.k_min;
    root["lower_bound"]["k_max"] = report.lower_bound.k_max;
    root["lower_bound"]["stabilization"] = report.lower_bound.stabilization;
    json diffs = json::array();
    for (const Int& d : report.lower_bound.difference) diffs.push_back(to_i64(d));
    root["lower_bound"]["differences"] = std::move(diffs);

    root["fit"]["degree"] = report.fit.degree;
    root["fit"]["stabilization"] = report.fit.stabilization;
    json coeffs = json::array();
    for (const Rational& c : report.fit.coefficients) coeffs.push_back(rational_to_string(c));
    root["fit"]["coefficients"] = std::move(coeffs);

    root["epy"]["bound"] = report.options.epy_bound;
    root["epy"]["exact"] = report.epy_exact;

    root["torsion"]["consistent"] = report.torsion.consistent;
    json rows = json::array();
    for (const TorsionRow& row : report.torsion.rows) {
        json r;
        r["k"] = row.k;
        r["b"] = row.b;
        r["bprime"] = row.bprime;
        r["h0"] = row.h0;
        r["h1"] = row.h1;
        r["conjectural"] = row.conjectural;
        r["h0_stabilized"] = row.h0_stabilized;
        rows.push_back(std::move(r));
    }
    root["torsion"]["rows"] = std::move(rows);

    if (report.complexity.cx)
        root["complexity"]["cx"] = *report.complexity.cx;
    else
        root["complexity"]["cx"] = nullptr;
    root["complexity"]["dim_r1"] = report.complexity.dim_r1;
    root["complexity"]["fitted_degree"] = report.complexity.fitted_degree;

    if (include_timings) {
        json timings = json::array();
        for (const auto& [phase, seconds] : report.timings) {
            json t;
            t["phase"] = phase;
            t["seconds"] = seconds;
            timings.push_back(std::move(t));
        }
        root["timings"] = std::move(timings);
    }

    return root.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "arrangement " << report.input.name << " (" << report.input.kind
        << "): n = " << report.input.lc.n << ", rank " << report.input.matroid.rank << "\n";
    out << "strategy " << mode_name(report.options.strategy.mode) << ", seed "
        << report.options.strategy.seed << "\n\n";

    out << "chen ranks (k = 1.." << report.theta.kmax << "):";
    for (int k = 1; k <= report.theta.kmax; ++k)
        out << " " << report.theta.theta[static_cast<std::size_t>(k)].get_str();
    out << "\n";
    out << "hilbert polynomial: ";
    if (report.fit.degree < 0) {
        out << "0";
    } else {
        for (int d = report.fit.degree; d >= 0; --d) {
            Rational c = report.fit.coefficients[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            if (d < report.fit.degree) {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (c != 1 || d == 0) out << c.get_str();
            if (d > 0) out << (c != 1 ? "*k" : "k");
            if (d > 1) out << "^" << d;
        }
    }
    out << "  (degree " << report.fit.degree << ", stabilizes at k = " << report.fit.stabilization
        << ")\n\n";

    out << "resonance components (" << (report.resonance.complete ? "complete" : "truncated")
        << " search): " << report.resonance.components.size() << "\n";
    for (const ResonanceComponent& comp : report.resonance.components) {
        out << "  " << (comp.kind == ComponentKind::local ? "local" : "essential")
            << ", projective dimension " << comp.projective_dimension;
        if (comp.kind == ComponentKind::local) {
            out << ", flat {";
            for (std::size_t i = 0; i < comp.flat.size(); ++i)
                out << (i ? "," : "") << comp.flat[i];
            out << "}";
        } else {
            out << ", partition ";
            for (const auto& block : comp.partition_blocks) {
                out << "{";
                for (std::size_t i = 0; i < block.size(); ++i) out << (i ? "," : "") << block[i];
                out << "}";
            }
        }
        out << "\n";
    }
    out << "h-vector:";
    for (const auto& [r, count] : report.resonance.h.h) out << " h_" << r << " = " << count;
    out << "\n\n";

    out << "conjecture table (theta_k vs (k-1) sum h_r C(r+k-1,k)):\n";
    out << std::setw(5) << "k" << std::setw(12) << "theta" << std::setw(12) << "rhs"
        << std::setw(12) << "diff" << "\n";
    for (const ConjectureRow& row : report.conjecture) {
        out << std::setw(5) << row.k << std::setw(12) << row.theta.get_str() << std::setw(12)
            << row.rhs.get_str() << std::setw(12) << row.difference.get_str() << "\n";
    }
    out << "lower bound holds from k = " << report.lower_bound.stabilization << "\n\n";

    out << "linear strand (window entries, cross-checked through k = "
        << report.cross_checked_through << "):\n";
    for (const auto& [key, value] : report.betti.beta)
        if (value != 0)
            out << "  beta_{" << key.first << "," << key.second << "} = " << value << "\n";
    out << "symmetric resolution exact through degree " << report.options.epy_bound << ": "
        << (report.epy_exact ? "yes" : "no") << "\n\n";

    out << "torsion table:\n";
    out << std::setw(5) << "k" << std::setw(8) << "B" << std::setw(8) << "B'" << std::setw(8)
        << "H0" << std::setw(15) << "H1(inferred)" << "\n";
    for (const TorsionRow& row : report.torsion.rows) {
        out << std::setw(5) << row.k << std::setw(8) << row.b << std::setw(8) << row.bprime
            << std::setw(8) << row.h0 << std::setw(15) << row.h1
            << (row.h0_stabilized ? "" : "  (window hit its cap)") << "\n";
    }
    out << "\ncomplexity: ";
    if (report.complexity.cx)
        out << "cx = " << *report.complexity.cx;
    else
        out << "cx not defined above rank 3";
    out << ", dim R1 = " << report.complexity.dim_r1
        << ", fitted degree = " << report.complexity.fitted_degree << "\n";
    return out.str();
}

} // namespace chenranks
