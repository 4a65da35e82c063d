#pragma once

// Test-side reference implementations, kept independent of the library code
// paths they are used to check.

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Gauss-Legendre nodes and weights on [-1,1] via Newton iteration on the
/// Legendre recurrence.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) : nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-16) break;
            }
            nodes[static_cast<std::size_t>(i)] = x;
            weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

/// Q(t) by composite Gauss-Legendre quadrature of the Gaussian density.
inline double gaussian_tail(double t) {
    if (t < 0.0) return 1.0 - gaussian_tail(-t);
    static const GaussLegendre rule(20);
    const double upper = t + 60.0;
    const int panels = 240;
    const double width = (upper - t) / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double mid = t + (i + 0.5) * width;
        const double half = 0.5 * width;
        double acc = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double s = mid + half * rule.nodes[j];
            acc += rule.weights[j] * std::exp(-0.5 * s * s);
        }
        total += acc * half;
    }
    return total / std::sqrt(2.0 * std::numbers::pi);
}

inline double entropy_direct(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Minimum of sum(p_i e_i) over all distributions with sum(p_i u_i) <= budget,
/// by enumerating every singleton and every straddling pair, with no
/// per-power-level reduction. e and u are aligned per subset.
inline double lp_exhaustive(const std::vector<double>& entropies, const std::vector<int>& levels,
                            double budget) {
    const std::size_t n = entropies.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (levels[i] <= budget && entropies[i] < best) best = entropies[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(levels[i] < budget && budget < levels[j])) continue;
            const double w2 = (budget - levels[i]) / (levels[j] - levels[i]);
            const double obj = (1.0 - w2) * entropies[i] + w2 * entropies[j];
            if (obj < best) best = obj;
        }
    }
    if (!std::isfinite(best)) throw std::domain_error("lp_exhaustive: infeasible budget");
    return best;
}

} // namespace oracle
