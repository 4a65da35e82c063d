#include "onebit/capacity.hpp"

#include "onebit/math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace onebit {

namespace {

constexpr double kProbTol = 1e-9;

void check_sigma2(double sigma2) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("noise variance must be positive and finite");
    }
}

double entropy_term(double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
}

// Pr[y = (+,+), (+,-), (-,+), (-,-) | x] from the two per-dimension up
// probabilities.
std::array<double, 4> transition_row(double q1, double q2) {
    return {q1 * q2, q1 * (1.0 - q2), (1.0 - q1) * q2, (1.0 - q1) * (1.0 - q2)};
}

struct SisoEntropies {
    double x1;
    double x2;
};

SisoEntropies siso_entropies(const ComplexChannel& h, double sigma2) {
    const RealChannel channel = realify(h);
    const SignalVector rep1 = {-1, 0};
    const SignalVector rep2 = {-1, -1};
    return {subset_entropy(channel, rep1, sigma2), subset_entropy(channel, rep2, sigma2)};
}

void check_siso(const ComplexChannel& h) {
    if (h.size() != 1) {
        throw std::invalid_argument("operation is defined for single-antenna channels only");
    }
}

double simpson(double a, double b, int panels, double (*f)(double)) {
    const double step = (b - a) / (2 * panels);
    double acc = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) {
        acc += f(a + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * step / 3.0;
}

double x1_retained(double theta) {
    const double s = std::sin(theta);
    return s * s;
}

double x2_retained(double theta) {
    return 1.0 - std::sin(2.0 * theta);
}

double best_retained(double theta) {
    return std::max(x1_retained(theta), x2_retained(theta));
}

} // namespace

double InputDistribution::total() const {
    double s = 0.0;
    for (const auto& m : masses) s += m.probability;
    return s;
}

double InputDistribution::average_power() const {
    double s = 0.0;
    for (const auto& m : masses) s += m.u * m.probability;
    return s;
}

std::vector<double> subset_entropies(const RealChannel& channel, double sigma2,
                                     const Constellation& cons) {
    if (channel.dims() != cons.dims()) {
        throw std::invalid_argument("subset_entropies: dimension mismatch");
    }
    std::vector<double> out;
    out.reserve(cons.subset_count());
    for (const auto& s : cons.subsets()) {
        out.push_back(subset_entropy(channel, s.representative, sigma2));
    }
    return out;
}

std::vector<double> dense_distribution(const Constellation& cons, const InputDistribution& dist) {
    std::vector<double> out(cons.vector_count(), 0.0);
    for (const auto& m : dist.masses) {
        const auto& subset = cons.subset(cons.linear_index(m.u, m.k));
        for (const auto& member : subset.members()) {
            out[signal_index(member)] += m.probability / 4.0;
        }
    }
    return out;
}

double mi_bruteforce(const RealChannel& channel, std::span<const double> dist, double sigma2) {
    check_sigma2(sigma2);
    const int m = channel.num_antennas();
    if (m < 1 || m > 3) {
        throw std::invalid_argument("mi_bruteforce: supported for M in [1,3] only");
    }
    std::size_t count = 1;
    for (int i = 0; i < 2 * m; ++i) count *= 3;
    count -= 1;
    if (dist.size() != count) {
        throw std::invalid_argument("mi_bruteforce: distribution must cover all nonzero vectors");
    }
    double sum = 0.0;
    for (double p : dist) {
        if (p < -1e-12) {
            throw std::invalid_argument("mi_bruteforce: negative probability");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbTol) {
        throw std::invalid_argument("mi_bruteforce: distribution must sum to 1");
    }

    std::array<double, 4> out_law = {0.0, 0.0, 0.0, 0.0};
    double cond_entropy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double p = dist[i];
        if (p <= 0.0) continue;
        const SignalVector x = signal_at(m, i);
        const auto row = transition_row(up_probability(channel, x, 0, sigma2),
                                        up_probability(channel, x, 1, sigma2));
        for (int y = 0; y < 4; ++y) {
            out_law[static_cast<std::size_t>(y)] += p * row[static_cast<std::size_t>(y)];
            cond_entropy += p * entropy_term(row[static_cast<std::size_t>(y)]);
        }
    }
    double out_entropy = 0.0;
    for (double p : out_law) out_entropy += entropy_term(p);
    return out_entropy - cond_entropy;
}

std::array<double, 4> output_distribution(const RealChannel& channel, std::span<const double> dist,
                                          double sigma2) {
    check_sigma2(sigma2);
    std::array<double, 4> out_law = {0.0, 0.0, 0.0, 0.0};
    const int m = channel.num_antennas();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double p = dist[i];
        if (p <= 0.0) continue;
        const SignalVector x = signal_at(m, i);
        const auto row = transition_row(up_probability(channel, x, 0, sigma2),
                                        up_probability(channel, x, 1, sigma2));
        for (int y = 0; y < 4; ++y) out_law[static_cast<std::size_t>(y)] += p * row[static_cast<std::size_t>(y)];
    }
    return out_law;
}

CapacityResult siso_capacity(const ComplexChannel& h, double sigma2, double total_power) {
    check_siso(h);
    check_sigma2(sigma2);
    if (!(total_power >= 1.0 && total_power <= 2.0)) {
        throw std::invalid_argument("siso_capacity: power budget must lie in [1,2]");
    }
    const auto [hx1, hx2] = siso_entropies(h, sigma2);

    CapacityResult result;
    if (hx1 <= hx2 || total_power == 1.0) {
        result.capacity_bits = 2.0 - hx1;
        result.case_tag = CapacityCase::x1_only;
        result.distribution.masses = {{1, 1, 1.0}};
    } else if (total_power < 2.0) {
        const double p2 = total_power - 1.0;
        result.capacity_bits = 2.0 - (1.0 - p2) * hx1 - p2 * hx2;
        result.case_tag = CapacityCase::time_share;
        result.distribution.masses = {{1, 1, 1.0 - p2}, {2, 1, p2}};
    } else {
        result.capacity_bits = 2.0 - hx2;
        result.case_tag = CapacityCase::x2_only;
        result.distribution.masses = {{2, 1, 1.0}};
    }
    return result;
}

CapacityResult miso_capacity(const RealChannel& channel, double sigma2, double total_power,
                             const Constellation& cons) {
    check_sigma2(sigma2);
    if (channel.dims() != cons.dims()) {
        throw std::invalid_argument("miso_capacity: dimension mismatch");
    }
    const int max_u = cons.dims();
    if (!(total_power >= 1.0)) {
        throw std::invalid_argument("miso_capacity: power budget below the minimum input power");
    }
    if (!(total_power <= max_u)) {
        throw std::invalid_argument("miso_capacity: power budget exceeds the maximum input power");
    }

    // The objective depends on k only through the entropy, so per power level
    // only the entropy-minimizing subset can appear in an optimal vertex.
    std::vector<double> best_entropy(static_cast<std::size_t>(max_u) + 1,
                                     std::numeric_limits<double>::infinity());
    std::vector<int> best_k(static_cast<std::size_t>(max_u) + 1, 0);
    for (const auto& s : cons.subsets()) {
        const double e = subset_entropy(channel, s.representative, sigma2);
        if (e < best_entropy[static_cast<std::size_t>(s.u)]) {
            best_entropy[static_cast<std::size_t>(s.u)] = e;
            best_k[static_cast<std::size_t>(s.u)] = s.k;
        }
    }

    CapacityResult result;
    double best_obj = std::numeric_limits<double>::infinity();

    // Vertices of the 2-constraint LP: feasible singletons first, then mixed
    // pairs straddling the budget. Scan order plus strict improvement yields
    // the smallest-(u,k) optimum.
    for (int u = 1; u <= max_u; ++u) {
        if (u > total_power) break;
        if (best_entropy[static_cast<std::size_t>(u)] < best_obj) {
            best_obj = best_entropy[static_cast<std::size_t>(u)];
            result.case_tag = CapacityCase::lp_singleton;
            result.distribution.masses = {{u, best_k[static_cast<std::size_t>(u)], 1.0}};
        }
    }
    for (int u1 = 1; u1 < max_u; ++u1) {
        if (!(u1 < total_power)) break;
        for (int u2 = u1 + 1; u2 <= max_u; ++u2) {
            if (!(u2 > total_power)) continue;
            const double p2 = (total_power - u1) / (u2 - u1);
            const double obj = (1.0 - p2) * best_entropy[static_cast<std::size_t>(u1)] +
                               p2 * best_entropy[static_cast<std::size_t>(u2)];
            if (obj < best_obj) {
                best_obj = obj;
                result.case_tag = CapacityCase::lp_pair;
                result.distribution.masses = {{u1, best_k[static_cast<std::size_t>(u1)], 1.0 - p2},
                                              {u2, best_k[static_cast<std::size_t>(u2)], p2}};
            }
        }
    }

    result.capacity_bits = 2.0 - best_obj;
    return result;
}

FullPowerResult capacity_full_power(const RealChannel& channel, double sigma2,
                                    const Constellation& cons) {
    check_sigma2(sigma2);
    if (channel.dims() != cons.dims()) {
        throw std::invalid_argument("capacity_full_power: dimension mismatch");
    }
    FullPowerResult result;
    double min_entropy = std::numeric_limits<double>::infinity();
    for (const auto& s : cons.subsets()) {
        const double e = subset_entropy(channel, s.representative, sigma2);
        if (e < min_entropy) {
            min_entropy = e;
            result.best_u = s.u;
            result.best_k = s.k;
        }
    }
    result.capacity_bits = 2.0 - min_entropy;
    return result;
}

double feedback_bits(int num_antennas, CodebookMode mode) {
    if (num_antennas < 1) {
        throw std::invalid_argument("feedback_bits: need at least one antenna");
    }
    if (mode == CodebookMode::dominant) {
        return 2.0 * num_antennas - 2.0;
    }
    return std::log2((std::pow(9.0, num_antennas) - 1.0) / 4.0);
}

double capacity_infinite_dacs(const ComplexChannel& h, double sigma2) {
    check_sigma2(sigma2);
    // matched precoding with the same average power budget 2M the one-bit
    // transmitter gets; at M=1 this is the plain rotated-QPSK rate
    const double budget = 2.0 * static_cast<double>(h.size());
    const double gain = norm_squared(h);
    return 2.0 * (1.0 - binary_entropy(q_function(std::sqrt(budget * gain / sigma2))));
}

double csir_only_siso_capacity(const ComplexChannel& h, double sigma2, double total_power) {
    check_siso(h);
    check_sigma2(sigma2);
    if (!(total_power >= 1.0 && total_power <= 2.0)) {
        throw std::invalid_argument("csir_only_siso_capacity: power budget must lie in [1,2]");
    }
    const auto [hx1, hx2] = siso_entropies(h, sigma2);
    const double p2 = total_power - 1.0;
    return 2.0 - (1.0 - p2) * hx1 - p2 * hx2;
}

double dac_loss_siso(const ComplexChannel& h, double sigma2) {
    check_siso(h);
    const auto [hx1, hx2] = siso_entropies(h, sigma2);
    const double infinite_dac_entropy =
        2.0 * binary_entropy(q_function(std::sqrt(2.0 * norm_squared(h) / sigma2)));
    return std::min(hx1, hx2) - infinite_dac_entropy;
}

PhaseThresholdResult phase_threshold_rate(const ComplexChannel& h, double sigma2) {
    check_siso(h);
    check_sigma2(sigma2);
    const double a = std::abs(h[0].real());
    const double b = std::abs(h[0].imag());
    if (a == 0.0 && b == 0.0) {
        return {0.0, PhaseChoice::x2, 0.0};
    }
    const double theta = std::atan2(std::min(a, b), std::max(a, b));
    const double gain = a * a + b * b;
    const double quarter = std::numbers::pi / 4.0;

    PhaseThresholdResult result;
    result.theta = theta;
    if (std::numbers::sqrt2 * std::sin(quarter - theta) < std::sin(theta)) {
        const double s = std::sqrt(2.0 * gain / sigma2);
        result.chosen_set = PhaseChoice::x1;
        result.rate_bits = 2.0 - binary_entropy(q_function(s * std::cos(theta))) -
                           binary_entropy(q_function(s * std::sin(theta)));
    } else {
        const double s = std::sqrt(4.0 * gain / sigma2);
        result.chosen_set = PhaseChoice::x2;
        result.rate_bits = 2.0 - binary_entropy(q_function(s * std::cos(quarter - theta))) -
                           binary_entropy(q_function(s * std::sin(quarter - theta)));
    }
    return result;
}

PowerLossBounds power_loss_bounds() {
    const double quarter = std::numbers::pi / 4.0;

    // Coarse scan for the worst phase, then ternary refinement of the
    // V-shaped retained-power curve.
    const int grid = 4096;
    int coarse = 0;
    double coarse_val = best_retained(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double v = best_retained(quarter * i / grid);
        if (v < coarse_val) {
            coarse_val = v;
            coarse = i;
        }
    }
    double lo = quarter * std::max(coarse - 1, 0) / grid;
    double hi = quarter * std::min(coarse + 1, grid) / grid;
    for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (best_retained(m1) < best_retained(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    const double worst_theta = 0.5 * (lo + hi);
    const double worst = best_retained(worst_theta);

    // Average retained power over a uniform phase: each branch is smooth, so
    // integrate the two sides of the crossover separately.
    const double mean = (simpson(0.0, worst_theta, 1 << 12, x2_retained) +
                         simpson(worst_theta, quarter, 1 << 12, x1_retained)) /
                        quarter;

    PowerLossBounds bounds;
    bounds.worst_case_db = -10.0 * std::log10(worst);
    bounds.ergodic_db = -10.0 * std::log10(mean);
    return bounds;
}

} // namespace onebit
