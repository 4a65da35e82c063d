#pragma once

#include "onebit/capacity.hpp"
#include "onebit/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace onebit {

enum class SweepVariant {
    onebit_both_csit,   // one-bit DACs and ADCs, transmitter knows the channel
    onebit_adc_inf_dac, // one-bit ADCs fed by infinite-resolution DACs
    siso_csir_only      // one-bit both, no transmitter channel knowledge (M=1)
};

/// Stable token used in CSV output and CLI flags.
std::string variant_name(SweepVariant variant);

struct SweepConfig {
    int num_antennas = 1;
    std::vector<double> snr_grid_db; // sorted ascending
    int num_channels = 1000;
    std::uint64_t seed = 0;
    std::vector<SweepVariant> variants;
};

struct SweepPoint {
    SweepVariant variant;
    double snr_db = 0.0;
    double mean_bits = 0.0;
    double stderr_bits = 0.0;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepPoint> points; // variant-major, SNR ascending within
};

/// One Rayleigh draw: independent CN(0,1) gains, i.e. N(0,1/2) per real part.
ComplexChannel sample_channel(int num_antennas, Xoshiro256& rng);

/// Mean capacity per SNR point for each requested variant, averaged over
/// num_channels common channel draws. The budget is fixed at the maximum
/// instantaneous power 2M, so sigma2 = 2M / 10^(snr_db/10).
SweepResult ergodic_sweep(const SweepConfig& config);

/// CSV with header: variant,snr_db,mean_bits,stderr_bits,num_channels,seed.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Horizontal distance in dB between two variants' capacity curves at the
/// given level, by linear interpolation of each curve's crossing.
double horizontal_gap_db(const SweepResult& result, SweepVariant faster, SweepVariant slower,
                         double level_bits);

} // namespace onebit
