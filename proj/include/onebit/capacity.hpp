#pragma once

#include "onebit/channel.hpp"
#include "onebit/constellation.hpp"

#include <array>
#include <span>
#include <vector>

namespace onebit {

/// Which regime produced a capacity result: the three closed-form cases of the
/// M=1 solution, or the support shape of the LP vertex for general M.
enum class CapacityCase { x1_only, time_share, x2_only, lp_singleton, lp_pair };

/// Codebook the training/feedback protocol runs over: every rotational subset,
/// or only the maximum-power ones.
enum class CodebookMode { full, dominant };

enum class PhaseChoice { x1, x2 };

struct SubsetMass {
    int u = 0;
    int k = 0;
    double probability = 0.0;
};

/// Input law of the capacity-achieving family: a mass per rotational subset,
/// uniform over the four members within each subset. Only positive masses are
/// stored, ordered by (u, k).
struct InputDistribution {
    std::vector<SubsetMass> masses;

    double total() const;
    double average_power() const;
};

struct CapacityResult {
    double capacity_bits = 0.0;
    CapacityCase case_tag = CapacityCase::lp_singleton;
    InputDistribution distribution;
};

struct FullPowerResult {
    double capacity_bits = 0.0;
    int best_u = 0;
    int best_k = 0;
};

struct PhaseThresholdResult {
    double rate_bits = 0.0;
    PhaseChoice chosen_set = PhaseChoice::x2;
    double theta = 0.0; // channel phase folded into [0, pi/4]
};

struct PowerLossBounds {
    double worst_case_db = 0.0;
    double ergodic_db = 0.0;
};

/// Entropy H_b^{X_{u,k}} for every subset, aligned with linear indices.
std::vector<double> subset_entropies(const RealChannel& channel, double sigma2,
                                     const Constellation& cons);

/// Expands per-subset masses into a dense distribution over all 3^{2M}-1
/// vectors, indexed by signal_index.
std::vector<double> dense_distribution(const Constellation& cons, const InputDistribution& dist);

/// Exact mutual information in bits between the channel input (drawn from
/// `dist` over all 3^{2M}-1 vectors, indexed by signal_index) and the pair of
/// sign outputs. Exponential in M; restricted to M <= 3.
double mi_bruteforce(const RealChannel& channel, std::span<const double> dist, double sigma2);

/// Output law P[y] under `dist`, indexed by (sign bit of y1, sign bit of y2):
/// 0 -> (+,+), 1 -> (+,-), 2 -> (-,+), 3 -> (-,-).
std::array<double, 4> output_distribution(const RealChannel& channel, std::span<const double> dist,
                                          double sigma2);

/// Closed-form capacity of the M=1 channel under average power budget
/// total_power in [1,2].
CapacityResult siso_capacity(const ComplexChannel& h, double sigma2, double total_power);

/// Capacity of the M-antenna channel under average power budget total_power in
/// [1,2M], by exact vertex enumeration of the entropy-minimization LP. The
/// returned support holds at most two subsets.
CapacityResult miso_capacity(const RealChannel& channel, double sigma2, double total_power,
                             const Constellation& cons);

/// Capacity at the maximum budget total_power = 2M: scans all subsets for the
/// entropy minimizer. Ties resolve to the smallest u, then smallest k.
FullPowerResult capacity_full_power(const RealChannel& channel, double sigma2,
                                    const Constellation& cons);

/// Feedback rate in bits needed to index the codebook: log2((9^M-1)/4) for the
/// full codebook, 2M-2 for the dominant one.
double feedback_bits(int num_antennas, CodebookMode mode);

/// Rate of one-bit ADCs fed by infinite-resolution DACs: QPSK through the
/// effective scalar channel, matched precoding for M > 1, at the same average
/// power budget 2M the one-bit transmitter gets.
double capacity_infinite_dacs(const ComplexChannel& h, double sigma2);

/// M=1 capacity without transmitter channel knowledge: the fixed time-sharing
/// schedule between the two power levels, not the channel-dependent best one.
double csir_only_siso_capacity(const ComplexChannel& h, double sigma2, double total_power);

/// Rate lost by the one-bit DAC at full budget (total_power = 2), relative to
/// the infinite-DAC rate. Nonnegative.
double dac_loss_siso(const ComplexChannel& h, double sigma2);

/// Low-feedback M=1 strategy: fold the channel phase into [0, pi/4], pick X_1
/// or X_2 by the threshold rule, and return that set's rate.
PhaseThresholdResult phase_threshold_rate(const ComplexChannel& h, double sigma2);

/// Power retained by the phase-threshold strategy relative to perfect
/// rotation, as dB losses: the worst case over phases and the average over a
/// uniform phase.
PowerLossBounds power_loss_bounds();

} // namespace onebit
