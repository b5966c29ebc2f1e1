#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chenranks/alexander.hpp"
#include "chenranks/combinatorics.hpp"
#include "chenranks/linstrand.hpp"
#include "chenranks/polyfit.hpp"
#include "chenranks/rank.hpp"
#include "chenranks/resonance.hpp"
#include "chenranks/torsion.hpp"

namespace chenranks {

// A validated arrangement, whatever the encoding it arrived in. The matroid
// is derived from the payload: normals and explicit rank-2 data stay within
// rank 3, graphs carry their cycle matroid.
struct ArrangementInput {
    std::string name;
    std::string kind; // "normals" | "line-combinatorics" | "graph"
    LineCombinatorics lc;
    Matroid matroid;
};

// Reads the JSON input schema:
//   {"name": str, "kind": "normals", "normals": [[a,b,c], ...]}
//   {"name": str, "kind": "line-combinatorics", "n": int, "flats": [[...], ...]}
//   {"name": str, "kind": "graph", "graph": {"vertices": int, "edges": [[u,v], ...]}}
// Schema violations name the JSON path of the offending field; combinatorial
// validation errors are surfaced verbatim.
ArrangementInput parse_input(const std::string& bytes);

struct ExampleEntry {
    std::string name; // registry key; (m) marks an integer parameter
    std::string description;
};

std::vector<ExampleEntry> list_examples();

// Instantiates a registry name, e.g. "braid", "pencil(5)", "complete-graph(4)".
ArrangementInput example_input(const std::string& name);

struct AnalyzeOptions {
    int kmax = 10;
    int imax = 6;
    exactla::RankStrategy strategy;
    int torsion_window = 4;
    SearchLimits limits;
    int epy_bound = 6;
};

struct ConjectureRow {
    int k = 0;
    Int theta;
    Int rhs;
    Int difference;
};

struct AnalysisReport {
    ArrangementInput input;
    AnalyzeOptions options;
    ChenSequence theta;
    BettiTable betti;
    int cross_checked_through = 0; // min(kmax, imax + 1)
    ComponentSearch resonance;
    std::vector<ConjectureRow> conjecture;
    LowerBoundReport lower_bound;
    PolynomialFit fit;
    bool epy_exact = false;
    TorsionReport torsion; // degrees 2..min(kmax, fit stabilization)
    ComplexityReport complexity;
    // wall-clock phase timings; serialized only on request, so that reports
    // for the same input, seed and strategy stay byte-identical
    std::vector<std::pair<std::string, double>> timings;
};

// Full pipeline: Chen ranks, resonance search, conjecture table and lower
// bound, polynomial fit, Betti table with the Chen cross-check, exactness
// certificate, torsion table, complexity report. Any theorem-level failure
// throws InvariantError.
AnalysisReport analyze(const ArrangementInput& input, const AnalyzeOptions& options);

// Deterministic JSON: sorted keys, rationals as "p/q" strings, integers as
// numbers. Timings are included only when asked for.
std::string report_json(const AnalysisReport& report, bool include_timings = false);

// Human-readable rendering; layout is not a stable interface.
std::string report_text(const AnalysisReport& report);

} // namespace chenranks
