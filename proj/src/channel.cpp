#include "onebit/channel.hpp"

#include "onebit/math.hpp"

#include <cmath>
#include <stdexcept>

namespace onebit {

namespace {

void check_sigma2(double sigma2) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("noise variance must be positive and finite");
    }
}

const std::vector<double>& row(const RealChannel& channel, int output_dim) {
    if (output_dim == 0) return channel.row1;
    if (output_dim == 1) return channel.row2;
    throw std::invalid_argument("output dimension must be 0 or 1");
}

} // namespace

RealChannel realify(const ComplexChannel& h) {
    if (h.empty()) {
        throw std::invalid_argument("realify: channel needs at least one antenna");
    }
    for (const auto& g : h) {
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
            throw std::invalid_argument("realify: channel gains must be finite");
        }
    }
    const std::size_t m = h.size();
    RealChannel out;
    out.row1.resize(2 * m);
    out.row2.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        out.row1[i] = h[i].real();
        out.row1[m + i] = -h[i].imag();
        out.row2[i] = h[i].imag();
        out.row2[m + i] = h[i].real();
    }
    return out;
}

ComplexChannel to_complex(const RealChannel& channel) {
    const std::size_t n = channel.row1.size();
    if (n == 0 || n % 2 != 0 || channel.row2.size() != n) {
        throw std::invalid_argument("to_complex: rows must have equal even length");
    }
    const std::size_t m = n / 2;
    ComplexChannel h(m);
    for (std::size_t i = 0; i < m; ++i) {
        h[i] = {channel.row1[i], channel.row2[i]};
        const bool consistent = channel.row1[m + i] == -channel.row2[i] &&
                                channel.row2[m + i] == channel.row1[i];
        if (!consistent) {
            throw std::invalid_argument("to_complex: rows lack the complex block structure");
        }
    }
    return h;
}

double norm_squared(const ComplexChannel& h) {
    double s = 0.0;
    for (const auto& g : h) s += std::norm(g);
    return s;
}

double channel_gain(const RealChannel& channel, std::span<const std::int8_t> x, int output_dim) {
    const auto& r = row(channel, output_dim);
    if (x.size() != r.size()) {
        throw std::invalid_argument("channel_gain: signal dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * x[i];
    return s;
}

double up_probability(const RealChannel& channel, std::span<const std::int8_t> x, int output_dim,
                      double sigma2) {
    check_sigma2(sigma2);
    const double scale = std::sqrt(2.0 / sigma2);
    return q_function(-scale * channel_gain(channel, x, output_dim));
}

double subset_entropy(const RealChannel& channel, std::span<const std::int8_t> x, double sigma2) {
    check_sigma2(sigma2);
    const double scale = std::sqrt(2.0 / sigma2);
    return binary_entropy(q_function(scale * channel_gain(channel, x, 0))) +
           binary_entropy(q_function(scale * channel_gain(channel, x, 1)));
}

} // namespace onebit
