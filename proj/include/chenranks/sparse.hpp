#ifndef CHENRANKS_SPARSE_HPP
#define CHENRANKS_SPARSE_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "chenranks/rational.hpp"

namespace chenranks::exactla {

// Column-major sparse matrix over Q. Columns hold (row, value) pairs sorted by
// row with no zero values and no duplicate rows once finalize() has run.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}

    void set(int r, int c, const Rational& v) {
        if (v == 0) return;
        col[static_cast<std::size_t>(c)].emplace_back(static_cast<std::uint32_t>(r), v);
    }

    // sort each column by row and merge duplicate rows
    void finalize() {
        for (auto& c : col) {
            std::sort(c.begin(), c.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t w = 0;
            for (std::size_t i = 0; i < c.size();) {
                std::uint32_t r = c[i].first;
                Rational acc = c[i].second;
                std::size_t j = i + 1;
                while (j < c.size() && c[j].first == r) { acc += c[j].second; ++j; }
                if (acc != 0) c[w++] = {r, acc};
                i = j;
            }
            c.resize(w);
        }
    }

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& c : col) t += c.size();
        return t;
    }
};

// Internal integer matrix used by the big structured eliminations. Entries are
// guaranteed small by construction (cleared denominators of reduction tails).
struct IntColumns {
    std::uint32_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> cols;

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& c : cols) t += c.size();
        return t;
    }
};

// Clears denominators column by column. Throws ResourceError if an entry
// leaves the 64-bit range (callers that can hit this go through SparseMatrix
// paths that reduce mod p from the exact rationals instead).
IntColumns to_int_columns(const SparseMatrix& m);

} // namespace chenranks::exactla

#endif
