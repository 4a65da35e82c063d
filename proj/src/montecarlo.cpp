#include "onebit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace onebit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double snr_db_to_sigma2(double snr_db, int num_antennas) {
    return 2.0 * num_antennas / std::pow(10.0, snr_db / 10.0);
}

void check_config(const SweepConfig& config) {
    if (config.num_antennas < 1 || config.num_antennas > 8) {
        throw std::invalid_argument("sweep: antenna count must be in [1,8]");
    }
    if (config.num_channels < 1) {
        throw std::invalid_argument("sweep: need at least one channel draw");
    }
    if (config.snr_grid_db.empty() || !std::is_sorted(config.snr_grid_db.begin(), config.snr_grid_db.end())) {
        throw std::invalid_argument("sweep: SNR grid must be non-empty and ascending");
    }
    if (config.variants.empty()) {
        throw std::invalid_argument("sweep: no variants requested");
    }
    for (auto v : config.variants) {
        if (v == SweepVariant::siso_csir_only && config.num_antennas != 1) {
            throw std::invalid_argument("sweep: the CSIR-only variant is single-antenna only");
        }
    }
}

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
    }
    double mean(int n) const { return sum / n; }
    double stderr_of_mean(int n) const {
        if (n < 2) return 0.0;
        const double variance = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
        return std::sqrt(variance / n);
    }
};

} // namespace

std::string variant_name(SweepVariant variant) {
    switch (variant) {
    case SweepVariant::onebit_both_csit: return "onebit_both_csit";
    case SweepVariant::onebit_adc_inf_dac: return "onebit_adc_inf_dac";
    case SweepVariant::siso_csir_only: return "siso_csir_only";
    }
    throw std::invalid_argument("unknown sweep variant");
}

ComplexChannel sample_channel(int num_antennas, Xoshiro256& rng) {
    if (num_antennas < 1) {
        throw std::invalid_argument("sample_channel: need at least one antenna");
    }
    ComplexChannel h(static_cast<std::size_t>(num_antennas));
    for (auto& gain : h) {
        const double re = rng.gaussian() * kInvSqrt2;
        const double im = rng.gaussian() * kInvSqrt2;
        gain = {re, im};
    }
    return h;
}

SweepResult ergodic_sweep(const SweepConfig& config) {
    check_config(config);
    const int m = config.num_antennas;
    const auto cons = Constellation::enumerate(m);
    const std::size_t num_points = config.snr_grid_db.size();

    std::vector<std::vector<Accumulator>> acc(
        config.variants.size(), std::vector<Accumulator>(num_points));

    for (int draw = 0; draw < config.num_channels; ++draw) {
        auto rng = substream(config.seed, {static_cast<std::uint64_t>(draw)});
        const ComplexChannel h = sample_channel(m, rng);
        const RealChannel channel = realify(h);
        for (std::size_t p = 0; p < num_points; ++p) {
            const double sigma2 = snr_db_to_sigma2(config.snr_grid_db[p], m);
            for (std::size_t v = 0; v < config.variants.size(); ++v) {
                double bits = 0.0;
                switch (config.variants[v]) {
                case SweepVariant::onebit_both_csit:
                    bits = capacity_full_power(channel, sigma2, cons).capacity_bits;
                    break;
                case SweepVariant::onebit_adc_inf_dac:
                    bits = capacity_infinite_dacs(h, sigma2);
                    break;
                case SweepVariant::siso_csir_only:
                    bits = csir_only_siso_capacity(h, sigma2, 2.0);
                    break;
                }
                acc[v][p].add(bits);
            }
        }
    }

    SweepResult result;
    result.config = config;
    result.points.reserve(config.variants.size() * num_points);
    for (std::size_t v = 0; v < config.variants.size(); ++v) {
        for (std::size_t p = 0; p < num_points; ++p) {
            result.points.push_back({config.variants[v], config.snr_grid_db[p],
                                     acc[v][p].mean(config.num_channels),
                                     acc[v][p].stderr_of_mean(config.num_channels)});
        }
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "variant,snr_db,mean_bits,stderr_bits,num_channels,seed\n";
    char buf[128];
    for (const auto& pt : result.points) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g", pt.snr_db, pt.mean_bits,
                      pt.stderr_bits);
        out << variant_name(pt.variant) << ',' << buf << ',' << result.config.num_channels << ','
            << result.config.seed << '\n';
    }
}

namespace {

// SNR at which a curve crosses `level`, linearly interpolated between the
// bracketing grid points.
double crossing_snr_db(const std::vector<const SweepPoint*>& curve, double level) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const double lo = curve[i - 1]->mean_bits;
        const double hi = curve[i]->mean_bits;
        if (lo <= level && level <= hi && hi > lo) {
            const double t = (level - lo) / (hi - lo);
            return curve[i - 1]->snr_db + t * (curve[i]->snr_db - curve[i - 1]->snr_db);
        }
    }
    throw std::domain_error("gap measurement: curve does not cross the requested level");
}

} // namespace

double horizontal_gap_db(const SweepResult& result, SweepVariant faster, SweepVariant slower,
                         double level_bits) {
    std::vector<const SweepPoint*> fast_curve, slow_curve;
    for (const auto& pt : result.points) {
        if (pt.variant == faster) fast_curve.push_back(&pt);
        if (pt.variant == slower) slow_curve.push_back(&pt);
    }
    if (fast_curve.empty() || slow_curve.empty()) {
        throw std::invalid_argument("gap measurement: variant missing from sweep");
    }
    return crossing_snr_db(slow_curve, level_bits) - crossing_snr_db(fast_curve, level_bits);
}

} // namespace onebit
