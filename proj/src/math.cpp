#include "onebit/math.hpp"

#include <cmath>
#include <stdexcept>

namespace onebit {

namespace {
constexpr double kEndpointTol = 1e-12;
constexpr double kInvSqrt2 = 0.70710678118654752440;
} // namespace

double q_function(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("q_function: input must be finite");
    }
    return 0.5 * std::erfc(t * kInvSqrt2);
}

double binary_entropy(double p) {
    if (!(p >= -kEndpointTol && p <= 1.0 + kEndpointTol)) {
        throw std::domain_error("binary_entropy: probability outside [0,1]");
    }
    if (p <= kEndpointTol || p >= 1.0 - kEndpointTol) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

} // namespace onebit
