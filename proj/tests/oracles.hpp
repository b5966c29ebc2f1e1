#ifndef CHENRANKS_TEST_ORACLES_HPP
#define CHENRANKS_TEST_ORACLES_HPP

// Independent brute-force implementations used to validate frozen expected
// values. These deliberately share no code with the library: plain dense
// forward elimination, direct definitions, no pivoting heuristics.

#include <vector>

#include "chenranks/rational.hpp"

namespace oracle {

using chenranks::Rational;

// Textbook dense forward elimination; returns the rank.
inline int rank_dense(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Membership of v in the row span of gens (appending must not raise the rank).
inline bool in_span(const std::vector<std::vector<Rational>>& gens,
                    const std::vector<Rational>& v) {
    auto ext = gens;
    ext.push_back(v);
    return rank_dense(ext) == rank_dense(gens);
}

inline bool same_span(const std::vector<std::vector<Rational>>& a,
                      const std::vector<std::vector<Rational>>& b) {
    auto uni = a;
    uni.insert(uni.end(), b.begin(), b.end());
    int ru = rank_dense(uni);
    return ru == rank_dense(a) && ru == rank_dense(b);
}

} // namespace oracle

#endif
