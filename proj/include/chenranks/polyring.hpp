#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "chenranks/errors.hpp"

namespace chenranks {

// Monomials of one degree in x_0..x_{n-1}, encoded as the non-decreasing
// sequence of variable indices packed 4 bits apiece (so n <= 16 and degree
// <= 16). Codes are kept sorted; positions in `codes` index the monomial
// basis everywhere a tensor factor S_d appears.
struct MonomialBasis {
    int n = 0;
    int d = 0;
    std::vector<std::uint64_t> codes;

    MonomialBasis() = default;
    MonomialBasis(int n_, int d_) : n(n_), d(d_) {
        if (n < 1 || n > 16) throw ResourceError("polynomial ring limited to 16 variables");
        if (d < 0 || d > 16) throw ResourceError("monomial degree limited to 16");
        std::vector<int> seq;
        std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(seq.size()) == d) {
                codes.push_back(encode(seq));
                return;
            }
            for (int v = lo; v < n; ++v) {
                seq.push_back(v);
                rec(v);
                seq.pop_back();
            }
        };
        rec(0);
        std::sort(codes.begin(), codes.end());
    }

    int size() const { return static_cast<int>(codes.size()); }

    int index(std::uint64_t code) const {
        auto it = std::lower_bound(codes.begin(), codes.end(), code);
        if (it == codes.end() || *it != code) throw InputError("monomial of the wrong degree");
        return static_cast<int>(it - codes.begin());
    }

    static std::uint64_t encode(const std::vector<int>& sorted_vars) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < sorted_vars.size(); ++i)
            code |= static_cast<std::uint64_t>(sorted_vars[i]) << (4 * i);
        return code;
    }

    static std::vector<int> decode(std::uint64_t code, int degree) {
        std::vector<int> vars(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) vars[static_cast<std::size_t>(i)] = code >> (4 * i) & 0xf;
        return vars;
    }

    // code of x_var * (degree-d monomial), an element of the degree-(d+1) basis
    static std::uint64_t multiply(std::uint64_t code, int degree, int var) {
        std::vector<int> vars = decode(code, degree);
        vars.insert(std::upper_bound(vars.begin(), vars.end(), var), var);
        return encode(vars);
    }
};

} // namespace chenranks
