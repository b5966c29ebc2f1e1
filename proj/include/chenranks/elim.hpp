#ifndef CHENRANKS_ELIM_HPP
#define CHENRANKS_ELIM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chenranks/gfp.hpp"
#include "chenranks/sparse.hpp"

namespace chenranks::exactla {

// Reduction onto the complement of a column space W: for v in the ambient
// space, (v mod W) lives on the free rows and equals
//   v[f] - sum over pivot rows r of v[r] * tail[r][f].
// Values are stored in the field the elimination ran over.
template <typename Value>
struct Quotient {
    std::uint32_t rows = 0;
    std::vector<std::uint32_t> free_rows;            // sorted
    std::vector<std::int32_t> slot_of_row;           // row -> pivot slot, or -1 (free)
    std::vector<std::int32_t> free_index_of_row;     // row -> compact free index, or -1
    // tails[slot]: sparse vector over compact free indices
    std::vector<std::vector<std::pair<std::uint32_t, Value>>> tails;

    bool is_pivot_row(std::uint32_t r) const { return slot_of_row[r] >= 0; }

    // Reduce a sparse ambient vector; result is (free index, value) pairs, sorted.
    template <typename Field>
    std::vector<std::pair<std::uint32_t, Value>>
    reduce(const std::vector<std::pair<std::uint32_t, Value>>& v, const Field& F,
           std::vector<Value>& scratch /* size >= free_rows.size(), zeroed */) const {
        std::vector<std::uint32_t> touched;
        for (const auto& [r, val] : v) {
            if (slot_of_row[r] >= 0) {
                for (const auto& [f, w] : tails[static_cast<std::size_t>(slot_of_row[r])]) {
                    scratch[f] = F.sub(scratch[f], F.mul(val, w));
                    touched.push_back(f);
                }
            } else {
                std::uint32_t f = static_cast<std::uint32_t>(free_index_of_row[r]);
                scratch[f] = F.add(scratch[f], val);
                touched.push_back(f);
            }
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        std::vector<std::pair<std::uint32_t, Value>> out;
        out.reserve(touched.size());
        for (std::uint32_t f : touched) {
            if (!F.is_zero(scratch[f])) out.emplace_back(f, scratch[f]);
            scratch[f] = Value{};
        }
        return out;
    }
};

using GfpQuotient = Quotient<std::uint64_t>;
using QQuotient = Quotient<Rational>;

struct GfpElimResult {
    std::uint32_t rank = 0;
    std::optional<GfpQuotient> quotient;
};

struct QElimResult {
    std::uint32_t rank = 0;
    std::optional<QQuotient> quotient;
};

// Field adaptors used by Quotient::reduce and the torsion pipeline.
struct GfpOps {
    PrimeField F;
    using Value = std::uint64_t;
    bool is_zero(Value v) const { return v == 0; }
    Value add(Value a, Value b) const { return F.add(a, b); }
    Value sub(Value a, Value b) const { return F.sub(a, b); }
    Value mul(Value a, Value b) const { return F.mul(a, b); }
};

struct QOps {
    using Value = Rational;
    bool is_zero(const Value& v) const { return v == 0; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
};

// Left-looking sparse Gaussian elimination over Z/p. Columns are processed in
// (static nnz, index) order; each column is fully reduced against existing
// pivots; its topmost surviving row becomes the pivot. With want_quotient the
// pivot columns are back-substituted into reduced form and returned as tails
// over the free rows. Throws if p divides a denominator (signalled to callers
// as a retry with a fresh prime).
GfpElimResult gfp_eliminate(const IntColumns& m, PrimeField F, bool want_quotient);
GfpElimResult gfp_eliminate(const SparseMatrix& m, PrimeField F, bool want_quotient,
                            bool* bad_prime);

// Exact rational counterpart (same structure, mpq arithmetic).
QElimResult q_eliminate(const IntColumns& m, bool want_quotient);
QElimResult q_eliminate(const SparseMatrix& m, bool want_quotient);

} // namespace chenranks::exactla

#endif
