#include "chenranks/elim.hpp"

#include <algorithm>
#include <functional>

#include "chenranks/errors.hpp"

namespace chenranks::exactla {

IntColumns to_int_columns(const SparseMatrix& m) {
    IntColumns out;
    out.rows = static_cast<std::uint32_t>(m.rows);
    out.cols.resize(m.col.size());
    for (std::size_t c = 0; c < m.col.size(); ++c) {
        Int l(1);
        for (const auto& [r, v] : m.col[c]) {
            (void)r;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        }
        auto& dst = out.cols[c];
        dst.reserve(m.col[c].size());
        for (const auto& [r, v] : m.col[c]) {
            Int z = v.get_num() * (l / v.get_den());
            dst.emplace_back(r, to_i64(z));
        }
    }
    return out;
}

namespace {

// One elimination pass shared by the modular and rational engines. Columns are
// fully reduced against existing pivots; the surviving topmost row becomes the
// column's pivot. Pivot columns keep their below-lead tail as produced (tails
// may sit on rows that become pivots of later columns; back-substitution fixes
// that when a quotient map is requested).
template <typename Ops>
class Eliminator {
  public:
    using Value = typename Ops::Value;

    Eliminator(Ops ops, std::uint32_t rows)
        : ops_(ops), work_(rows, Value{}), slot_of_row_(rows, -1) {}

    bool add_column(const std::vector<std::pair<std::uint32_t, Value>>& c) {
        for (const auto& [r, v] : c) {
            if (ops_.is_zero(v)) continue;
            bool was_zero = ops_.is_zero(work_[r]);
            work_[r] = ops_.add(work_[r], v);
            if (was_zero) push_heap_row(r);
        }
        std::vector<std::pair<std::uint32_t, Value>> out;
        while (!heap_.empty()) {
            std::uint32_t r = pop_heap_row();
            Value v = work_[r];
            if (ops_.is_zero(v)) continue;
            work_[r] = Value{};
            std::int32_t s = slot_of_row_[r];
            if (s < 0) {
                out.emplace_back(r, v);
                continue;
            }
            const auto& pc = pivots_[static_cast<std::size_t>(s)];
            for (std::size_t i = 1; i < pc.size(); ++i) {
                const auto& [rr, w] = pc[i];
                bool was_zero = ops_.is_zero(work_[rr]);
                work_[rr] = ops_.sub(work_[rr], ops_.mul(v, w));
                if (was_zero) push_heap_row(rr);
            }
        }
        if (out.empty()) return false;
        // normalize lead to 1
        Value lead = out.front().second;
        Value li = ops_.invert(lead);
        for (auto& [r, v] : out) v = ops_.mul(v, li);
        slot_of_row_[out.front().first] = static_cast<std::int32_t>(pivots_.size());
        pivots_.push_back(std::move(out));
        return true;
    }

    std::uint32_t rank() const { return static_cast<std::uint32_t>(pivots_.size()); }

    Quotient<Value> make_quotient() {
        Quotient<Value> q;
        std::uint32_t rows = static_cast<std::uint32_t>(work_.size());
        q.rows = rows;
        q.slot_of_row = slot_of_row_;
        q.free_index_of_row.assign(rows, -1);
        for (std::uint32_t r = 0; r < rows; ++r) {
            if (slot_of_row_[r] < 0) {
                q.free_index_of_row[r] = static_cast<std::int32_t>(q.free_rows.size());
                q.free_rows.push_back(r);
            }
        }
        q.tails.resize(pivots_.size());
        // back-substitute pivots in decreasing lead order so any pivot row met
        // in a tail already has its final free-row form
        std::vector<std::uint32_t> order(pivots_.size());
        for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return pivots_[a].front().first > pivots_[b].front().first;
        });
        std::vector<Value> acc(q.free_rows.size(), Value{});
        std::vector<std::uint32_t> touched;
        for (std::uint32_t s : order) {
            const auto& pc = pivots_[s];
            for (std::size_t i = 1; i < pc.size(); ++i) {
                const auto& [r, v] = pc[i];
                std::int32_t rs = slot_of_row_[r];
                if (rs < 0) {
                    std::uint32_t f = static_cast<std::uint32_t>(q.free_index_of_row[r]);
                    if (ops_.is_zero(acc[f])) touched.push_back(f);
                    acc[f] = ops_.add(acc[f], v);
                } else {
                    for (const auto& [f, w] : q.tails[static_cast<std::size_t>(rs)]) {
                        if (ops_.is_zero(acc[f])) touched.push_back(f);
                        acc[f] = ops_.sub(acc[f], ops_.mul(v, w));
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            auto& tail = q.tails[s];
            tail.reserve(touched.size());
            for (std::uint32_t f : touched) {
                if (!ops_.is_zero(acc[f])) tail.emplace_back(f, acc[f]);
                acc[f] = Value{};
            }
            touched.clear();
        }
        return q;
    }

  private:
    void push_heap_row(std::uint32_t r) {
        heap_.push_back(r);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    }
    std::uint32_t pop_heap_row() {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
        std::uint32_t r = heap_.back();
        heap_.pop_back();
        return r;
    }

    Ops ops_;
    std::vector<Value> work_;
    std::vector<std::int32_t> slot_of_row_;
    std::vector<std::vector<std::pair<std::uint32_t, Value>>> pivots_;
    std::vector<std::uint32_t> heap_;
};

struct GfpFull : GfpOps {
    Value invert(Value v) const { return F.inv(v); }
};

struct QFull : QOps {
    Value invert(const Value& v) const { return Value(1) / v; }
};

// column processing order: fewest nonzeros first, then lowest index
template <typename Col>
std::vector<std::uint32_t> column_order(const std::vector<Col>& cols) {
    std::vector<std::uint32_t> order(cols.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return cols[a].size() < cols[b].size();
    });
    return order;
}

} // namespace

GfpElimResult gfp_eliminate(const IntColumns& m, PrimeField F, bool want_quotient) {
    Eliminator<GfpFull> e(GfpFull{{F}}, m.rows);
    std::vector<std::pair<std::uint32_t, std::uint64_t>> conv;
    for (std::uint32_t c : column_order(m.cols)) {
        conv.clear();
        for (const auto& [r, v] : m.cols[c]) {
            std::uint64_t x = F.from_i64(v);
            if (x != 0) conv.emplace_back(r, x);
        }
        e.add_column(conv);
    }
    GfpElimResult res;
    res.rank = e.rank();
    if (want_quotient) res.quotient = e.make_quotient();
    return res;
}

GfpElimResult gfp_eliminate(const SparseMatrix& m, PrimeField F, bool want_quotient,
                            bool* bad_prime) {
    if (bad_prime) *bad_prime = false;
    Eliminator<GfpFull> e(GfpFull{{F}}, static_cast<std::uint32_t>(m.rows));
    std::vector<std::pair<std::uint32_t, std::uint64_t>> conv;
    for (std::uint32_t c : column_order(m.col)) {
        conv.clear();
        for (const auto& [r, v] : m.col[c]) {
            std::uint64_t x = 0;
            if (!F.from_rational(v, x)) {
                if (bad_prime) { *bad_prime = true; return {}; }
                throw ResourceError("prime divides an input denominator");
            }
            if (x != 0) conv.emplace_back(r, x);
        }
        e.add_column(conv);
    }
    GfpElimResult res;
    res.rank = e.rank();
    if (want_quotient) res.quotient = e.make_quotient();
    return res;
}

QElimResult q_eliminate(const IntColumns& m, bool want_quotient) {
    Eliminator<QFull> e(QFull{}, m.rows);
    std::vector<std::pair<std::uint32_t, Rational>> conv;
    for (std::uint32_t c : column_order(m.cols)) {
        conv.clear();
        for (const auto& [r, v] : m.cols[c]) conv.emplace_back(r, Rational(static_cast<long>(v)));
        e.add_column(conv);
    }
    QElimResult res;
    res.rank = e.rank();
    if (want_quotient) res.quotient = e.make_quotient();
    return res;
}

QElimResult q_eliminate(const SparseMatrix& m, bool want_quotient) {
    Eliminator<QFull> e(QFull{}, static_cast<std::uint32_t>(m.rows));
    for (std::uint32_t c : column_order(m.col)) {
        e.add_column(m.col[c]);
    }
    QElimResult res;
    res.rank = e.rank();
    if (want_quotient) res.quotient = e.make_quotient();
    return res;
}

} // namespace chenranks::exactla
