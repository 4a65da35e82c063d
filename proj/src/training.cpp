#include "onebit/training.hpp"

#include "onebit/math.hpp"
#include "onebit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace onebit {

namespace {

void check_repetitions(int repetitions) {
    if (repetitions < 1) {
        throw std::invalid_argument("training: need at least one repetition");
    }
}

// Empirical entropy of one subset from `repetitions` pilot sends of its
// representative. A frequency of exactly 0 or 1 is pulled half a sample into
// the open interval so a lucky short run cannot claim a perfect channel.
double empirical_entropy(const RealChannel& channel, const SignalVector& rep, double sigma2,
                         int repetitions, Xoshiro256& rng) {
    int up1 = 0;
    int up2 = 0;
    for (int i = 0; i < repetitions; ++i) {
        const auto y = simulate_output(channel, rep, sigma2, rng);
        up1 += y[0] > 0;
        up2 += y[1] > 0;
    }
    const double floor = 1.0 / (2.0 * repetitions);
    auto estimate = [&](int up) {
        const double p = static_cast<double>(up) / repetitions;
        if (p == 0.0) return floor;
        if (p == 1.0) return 1.0 - floor;
        return p;
    };
    return binary_entropy(estimate(up1)) + binary_entropy(estimate(up2));
}

TrainingOutcome train_over_range(const RealChannel& channel, double sigma2,
                                 const Constellation& cons, std::size_t first, std::size_t last,
                                 int repetitions, double fb_bits, Xoshiro256& rng) {
    TrainingOutcome outcome;
    outcome.training_length = (last - first) * static_cast<std::size_t>(repetitions);
    outcome.feedback_bits = fb_bits;
    outcome.estimates.reserve(last - first);

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i < last; ++i) {
        const auto& subset = cons.subset(i);
        const double est =
            empirical_entropy(channel, subset.representative, sigma2, repetitions, rng);
        outcome.estimates.push_back({subset.u, subset.k, est});
        if (est < best) {
            best = est;
            outcome.selected_u = subset.u;
            outcome.selected_k = subset.k;
        }
    }
    return outcome;
}

} // namespace

std::array<int, 2> simulate_output(const RealChannel& channel, const SignalVector& x,
                                   double sigma2, Xoshiro256& rng) {
    const double noise_scale = std::sqrt(sigma2 / 2.0);
    std::array<int, 2> y;
    for (int n = 0; n < 2; ++n) {
        const double value = channel_gain(channel, x, n) + noise_scale * rng.gaussian();
        y[static_cast<std::size_t>(n)] = value >= 0.0 ? 1 : -1;
    }
    return y;
}

TrainingOutcome full_training(const RealChannel& channel, double sigma2, const Constellation& cons,
                              int repetitions, Xoshiro256& rng) {
    check_repetitions(repetitions);
    return train_over_range(channel, sigma2, cons, 0, cons.subset_count(), repetitions,
                            feedback_bits(cons.num_antennas(), CodebookMode::full), rng);
}

TrainingOutcome dominant_training(const RealChannel& channel, double sigma2,
                                  const Constellation& cons, int repetitions, Xoshiro256& rng) {
    check_repetitions(repetitions);
    const int top = cons.dims();
    const std::size_t first = cons.level_offset(top);
    return train_over_range(channel, sigma2, cons, first, first + cons.level_count(top),
                            repetitions, feedback_bits(cons.num_antennas(), CodebookMode::dominant),
                            rng);
}

double achieved_rate(const RealChannel& channel, double sigma2, const Constellation& cons, int u,
                     int k) {
    const auto& subset = cons.subset(cons.linear_index(u, k));
    return 2.0 - subset_entropy(channel, subset.representative, sigma2);
}

FeedbackCodeword encode_feedback(const Constellation& cons, CodebookMode mode, int u, int k) {
    FeedbackCodeword word;
    word.bits = static_cast<int>(std::ceil(feedback_bits(cons.num_antennas(), mode)));
    if (mode == CodebookMode::dominant) {
        if (u != cons.dims()) {
            throw std::invalid_argument("encode_feedback: dominant codebook holds only max-power subsets");
        }
        cons.linear_index(u, k); // validates k
        word.value = static_cast<std::uint64_t>(k - 1);
    } else {
        word.value = cons.linear_index(u, k);
    }
    return word;
}

std::pair<int, int> decode_feedback(const Constellation& cons, CodebookMode mode,
                                    FeedbackCodeword codeword) {
    if (mode == CodebookMode::dominant) {
        const int u = cons.dims();
        const int k = static_cast<int>(codeword.value) + 1;
        cons.linear_index(u, k);
        return {u, k};
    }
    const auto& subset = cons.subset(codeword.value);
    return {subset.u, subset.k};
}

TrainingSweepResult ergodic_training_sweep(const TrainingSweepConfig& config) {
    if (config.num_antennas < 1 || config.num_antennas > 8) {
        throw std::invalid_argument("training sweep: antenna count must be in [1,8]");
    }
    if (config.num_channels < 1) {
        throw std::invalid_argument("training sweep: need at least one channel draw");
    }
    if (config.snr_grid_db.empty() ||
        !std::is_sorted(config.snr_grid_db.begin(), config.snr_grid_db.end())) {
        throw std::invalid_argument("training sweep: SNR grid must be non-empty and ascending");
    }
    check_repetitions(config.repetitions);

    const int m = config.num_antennas;
    const auto cons = Constellation::enumerate(m);
    const std::size_t num_points = config.snr_grid_db.size();
    const std::uint64_t mode_tag = config.mode == CodebookMode::full ? 1 : 2;

    std::vector<double> rate_sum(num_points, 0.0), rate_sq(num_points, 0.0),
        cap_sum(num_points, 0.0);
    std::size_t training_length = 0;
    double fb_bits = 0.0;

    for (int draw = 0; draw < config.num_channels; ++draw) {
        auto channel_rng = substream(config.seed, {static_cast<std::uint64_t>(draw)});
        const RealChannel channel = realify(sample_channel(m, channel_rng));
        for (std::size_t p = 0; p < num_points; ++p) {
            const double sigma2 =
                2.0 * m / std::pow(10.0, config.snr_grid_db[p] / 10.0);
            auto noise_rng =
                substream(config.seed, {static_cast<std::uint64_t>(draw), p + 1, mode_tag});
            const TrainingOutcome outcome =
                config.mode == CodebookMode::full
                    ? full_training(channel, sigma2, cons, config.repetitions, noise_rng)
                    : dominant_training(channel, sigma2, cons, config.repetitions, noise_rng);
            const double rate =
                achieved_rate(channel, sigma2, cons, outcome.selected_u, outcome.selected_k);
            rate_sum[p] += rate;
            rate_sq[p] += rate * rate;
            cap_sum[p] += capacity_full_power(channel, sigma2, cons).capacity_bits;
            training_length = outcome.training_length;
            fb_bits = outcome.feedback_bits;
        }
    }

    TrainingSweepResult result;
    result.config = config;
    result.points.reserve(num_points);
    const int n = config.num_channels;
    for (std::size_t p = 0; p < num_points; ++p) {
        TrainingSweepPoint pt;
        pt.snr_db = config.snr_grid_db[p];
        pt.mean_rate_bits = rate_sum[p] / n;
        pt.mean_capacity_bits = cap_sum[p] / n;
        if (n > 1) {
            const double variance =
                std::max(0.0, (rate_sq[p] - rate_sum[p] * rate_sum[p] / n) / (n - 1));
            pt.stderr_rate_bits = std::sqrt(variance / n);
        }
        pt.training_length = training_length;
        pt.feedback_bits = fb_bits;
        result.points.push_back(pt);
    }
    return result;
}

void write_training_csv(std::ostream& out, const TrainingSweepResult& result) {
    out << "mode,L,snr_db,mean_rate_bits,capacity_bits,gap_bits,training_length,feedback_bits,"
           "seed\n";
    const char* mode = result.config.mode == CodebookMode::full ? "full" : "dominant";
    char buf[200];
    for (const auto& pt : result.points) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g", pt.snr_db, pt.mean_rate_bits,
                      pt.mean_capacity_bits, pt.mean_capacity_bits - pt.mean_rate_bits);
        char fb[32];
        std::snprintf(fb, sizeof(fb), "%.12g", pt.feedback_bits);
        out << mode << ',' << result.config.repetitions << ',' << buf << ',' << pt.training_length
            << ',' << fb << ',' << result.config.seed << '\n';
    }
}

} // namespace onebit
