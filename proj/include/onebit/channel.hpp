#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace onebit {

/// Baseband channel gains, one complex coefficient per transmit antenna.
using ComplexChannel = std::vector<std::complex<double>>;

/// Real-valued lifting of a complex MISO channel. The two rows act on stacked
/// [real; imaginary] signal vectors of length 2M; each of the two outputs sees
/// independent N(0, sigma2/2) noise before sign quantization.
struct RealChannel {
    std::vector<double> row1; // [Re(h), -Im(h)]
    std::vector<double> row2; // [Im(h),  Re(h)]

    int num_antennas() const { return static_cast<int>(row1.size()) / 2; }
    int dims() const { return static_cast<int>(row1.size()); }
};

RealChannel realify(const ComplexChannel& h);

/// Inverse of realify. Throws if the rows do not carry the block structure.
ComplexChannel to_complex(const RealChannel& channel);

double norm_squared(const ComplexChannel& h);

/// Noiseless output h_n^T x of output dimension n in {0,1}.
double channel_gain(const RealChannel& channel, std::span<const std::int8_t> x, int output_dim);

/// Pr[y_n = +1 | x] for output dimension n in {0,1}.
double up_probability(const RealChannel& channel, std::span<const std::int8_t> x, int output_dim,
                      double sigma2);

/// Sum over both output dimensions of H_b(Q(sqrt(2/sigma2) h_n^T x)), in bits.
/// The value is the same for every member of the rotational subset of x.
double subset_entropy(const RealChannel& channel, std::span<const std::int8_t> x, double sigma2);

} // namespace onebit
