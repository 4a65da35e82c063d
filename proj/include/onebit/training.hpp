#pragma once

#include "onebit/capacity.hpp"
#include "onebit/rng.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace onebit {

struct SubsetEstimate {
    int u = 0;
    int k = 0;
    double entropy_bits = 0.0; // empirical estimate of H_b^{X_{u,k}}
};

struct TrainingOutcome {
    int selected_u = 0;
    int selected_k = 0;
    std::size_t training_length = 0;
    double feedback_bits = 0.0;
    std::vector<SubsetEstimate> estimates; // in scan order
};

/// One noisy channel use: the pair of output signs of Hx + z with independent
/// N(0, sigma2/2) noise per dimension. sign(0) counts as +1.
std::array<int, 2> simulate_output(const RealChannel& channel, const SignalVector& x,
                                   double sigma2, Xoshiro256& rng);

/// Pilot phase over every rotational subset: sends each representative
/// `repetitions` times, estimates each subset entropy from the empirical
/// up-frequencies, and selects the lowest (ties to smallest u, then k).
TrainingOutcome full_training(const RealChannel& channel, double sigma2, const Constellation& cons,
                              int repetitions, Xoshiro256& rng);

/// Same protocol restricted to the maximum-power subsets, whose members have
/// no zero entries.
TrainingOutcome dominant_training(const RealChannel& channel, double sigma2,
                                  const Constellation& cons, int repetitions, Xoshiro256& rng);

/// Rate actually achieved by committing to subset (u,k): 2 minus its true
/// entropy under the true channel.
double achieved_rate(const RealChannel& channel, double sigma2, const Constellation& cons, int u,
                     int k);

/// Index sent over the feedback link, together with its width in whole bits.
struct FeedbackCodeword {
    std::uint64_t value = 0;
    int bits = 0;
};

/// Encodes a selected subset for the codebook `mode`: the global linear index
/// for the full codebook, k-1 for the dominant one.
FeedbackCodeword encode_feedback(const Constellation& cons, CodebookMode mode, int u, int k);

/// Transmitter-side decode; exact inverse of encode_feedback.
std::pair<int, int> decode_feedback(const Constellation& cons, CodebookMode mode,
                                    FeedbackCodeword codeword);

struct TrainingSweepConfig {
    int num_antennas = 1;
    std::vector<double> snr_grid_db; // sorted ascending
    int num_channels = 1000;
    std::uint64_t seed = 0;
    CodebookMode mode = CodebookMode::full;
    int repetitions = 10;
};

struct TrainingSweepPoint {
    double snr_db = 0.0;
    double mean_rate_bits = 0.0;
    double stderr_rate_bits = 0.0;
    double mean_capacity_bits = 0.0; // full-budget capacity over the same draws
    std::size_t training_length = 0;
    double feedback_bits = 0.0;
};

struct TrainingSweepResult {
    TrainingSweepConfig config;
    std::vector<TrainingSweepPoint> points;
};

/// Mean achieved rate of the training protocol per SNR point, with the
/// capacity curve from the same channel draws for reference. Channel draws
/// depend only on (seed, draw index), so runs with different modes or
/// repetition counts see identical channels.
TrainingSweepResult ergodic_training_sweep(const TrainingSweepConfig& config);

/// CSV with header: mode,L,snr_db,mean_rate_bits,capacity_bits,gap_bits,
/// training_length,feedback_bits,seed.
void write_training_csv(std::ostream& out, const TrainingSweepResult& result);

} // namespace onebit
