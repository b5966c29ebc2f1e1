#ifndef CHENRANKS_TORSION_HPP
#define CHENRANKS_TORSION_HPP

#include <vector>

#include "chenranks/alexander.hpp"
#include "chenranks/rank.hpp"
#include "chenranks/resonance.hpp"

namespace chenranks {

// dim B'_k where B' is the direct sum of the modules B(p) attached to the
// first-resonance components; the components barely interact, so the sum
// reduces to h-vector bookkeeping.
Int bprime_hilbert(const HVector& h, int k);

// Dimension of the window-d kill space {x in B_k : x * S_d = 0 in B_{k+d}}.
// The space grows with d and reaches dim H0_m(B)_k once the window is wide
// enough; h0_torsion widens d until two consecutive values agree (or the cap
// is hit) and says which of the two happened.
struct TorsionValue {
    long long value = 0;
    int window_used = 0;
    bool stabilized = false;
};

TorsionValue h0_torsion(const AlexanderInvariant& invariant, int k, int window,
                        const exactla::RankStrategy& strategy);

// One degree of the sheaf-sequence bookkeeping. h1 is never computed
// directly: it is inferred as bprime - b + h0, which presumes that the B(p)
// and the sheaf pieces they approximate agree, hence the conjectural flag.
// A negative inferred h1 is a consistency failure and is reported as is.
struct TorsionRow {
    int k = 0;
    long long b = 0;
    long long bprime = 0;
    long long h0 = 0;
    long long h1 = 0;
    bool conjectural = true;
    bool h0_stabilized = true;
};

struct TorsionReport {
    std::vector<TorsionRow> rows;
    bool consistent = true; // no row inferred a negative h1
};

// Pure bookkeeping over three aligned dimension sequences starting at k_min.
TorsionReport sheaf_sequence_report(const std::vector<long long>& b,
                                    const std::vector<long long>& bprime,
                                    const std::vector<long long>& h0, int k_min);

// Full table over k = k_min..k_max: dim B_k from the invariant, dim B'_k from
// the h-vector, H0 from h0_torsion with the given window cap.
TorsionReport torsion_table(const AlexanderInvariant& invariant, const HVector& h, int k_min,
                            int k_max, int window, const exactla::RankStrategy& strategy);

} // namespace chenranks

#endif
