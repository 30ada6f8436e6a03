#pragma once

#include <string>
#include <vector>

#include "cliffweil/multivector.hpp"
#include "cliffweil/series.hpp"
#include "cliffweil/weil.hpp"

namespace cliffweil {

// One Gaussian-average of a monomial: the rational value together with the
// power of the width parameter it carries.
struct Moment {
    Scalar value;
    int tPower = 0;
};

// Average of X^beta against the centered kernel normalized so every second
// moment is 2t: zero when any entry of beta is odd, otherwise
// prod_i (2t)^{beta_i/2} (beta_i - 1)!!.
Moment gaussianMoment(const std::vector<int>& beta);

// Width-power coefficients of the averaged product phi(X) exp(-lambda(X)).
struct AsympExpansion {
    std::vector<Multivector> psi;  // index = power of the width parameter
    int K = 0;
};

// Expands phi(X) times the finite exterior exponential of -sum_i x_i
// lambda_i, averages monomial-wise, and groups by width power up to K.
// Throws std::invalid_argument on a variable count mismatch or when
// 2K exceeds the series order.
AsympExpansion expand(const Series& phi, const SpinData& sd, int K);

// Report on the expansion: (a) psi_k lives in even degrees at most 2k;
// (b) for 2k <= ambient dimension, the degree-2k part of psi_k equals the
// degree-2k part of phi evaluated at -2 times the canonical mixed element
// rebuilt from sd.alpha.  Empty means both hold.
std::vector<std::string> checkMomentExpansion(const Series& phi, const SpinData& sd);

}  // namespace cliffweil
