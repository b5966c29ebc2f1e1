#pragma once

#include <vector>

#include "chenranks/alexander.hpp"

namespace chenranks {

// Polynomial eventually agreeing with the degreewise dimensions of the
// invariant: the smallest degree d admitting an interpolant through d+1
// consecutive values that continues to match up to the top of the computed
// range, with at least d+2 matched values in total. degree -1 encodes the
// zero polynomial (coefficients empty).
struct PolynomialFit {
    int degree = -1;
    int stabilization = 0;               // earliest degree from which it matches
    std::vector<Rational> coefficients;  // ascending powers of k
};

PolynomialFit fit_hilbert_polynomial(const ChenSequence& theta, int k_min = 2);

Rational evaluate_polynomial(const std::vector<Rational>& coefficients, int k);

} // namespace chenranks
