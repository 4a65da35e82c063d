#pragma once

namespace onebit {

/// Tail probability of the standard Gaussian, Q(t) = P[N(0,1) > t].
/// Throws std::domain_error for non-finite input.
double q_function(double t);

/// Binary entropy in bits, H_b(p) = -p log2 p - (1-p) log2 (1-p).
/// Inputs within 1e-12 of {0,1} are clamped to the endpoint (return exactly 0);
/// anything further outside [0,1] throws std::domain_error.
double binary_entropy(double p);

} // namespace onebit
