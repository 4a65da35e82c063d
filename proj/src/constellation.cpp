#include "onebit/constellation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace onebit {

namespace {

void check_signal(const SignalVector& x) {
    if (x.empty() || x.size() % 2 != 0) {
        throw std::invalid_argument("signal vector must have even, nonzero length");
    }
    bool all_zero = true;
    for (auto e : x) {
        if (e < -1 || e > 1) {
            throw std::invalid_argument("signal entries must lie in {-1,0,+1}");
        }
        all_zero = all_zero && e == 0;
    }
    if (all_zero) {
        throw std::invalid_argument("the all-zero vector is not a channel input");
    }
}

std::size_t pow3(int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

} // namespace

int power_level(const SignalVector& x) {
    int u = 0;
    for (auto e : x) u += e != 0;
    return u;
}

SignalVector rotate(const SignalVector& x) {
    const std::size_t m = x.size() / 2;
    SignalVector y(x.size());
    for (std::size_t i = 0; i < m; ++i) {
        y[i] = static_cast<std::int8_t>(-x[m + i]);
        y[m + i] = x[i];
    }
    return y;
}

std::vector<std::vector<int>> rotation_matrix(int num_antennas) {
    if (num_antennas < 1) {
        throw std::invalid_argument("rotation_matrix: need at least one antenna");
    }
    const int m = num_antennas;
    std::vector<std::vector<int>> r(2 * m, std::vector<int>(2 * m, 0));
    for (int i = 0; i < m; ++i) {
        r[i][m + i] = -1;
        r[m + i][i] = 1;
    }
    return r;
}

std::vector<std::complex<double>> complexify(const SignalVector& x) {
    const std::size_t m = x.size() / 2;
    std::vector<std::complex<double>> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = {static_cast<double>(x[i]), static_cast<double>(x[m + i])};
    }
    return out;
}

std::array<SignalVector, 4> RotationalSubset::members() const {
    std::array<SignalVector, 4> out;
    out[0] = representative;
    for (int i = 1; i < 4; ++i) out[i] = rotate(out[i - 1]);
    return out;
}

Constellation Constellation::enumerate(int num_antennas) {
    if (num_antennas < 1 || num_antennas > 8) {
        throw std::invalid_argument("Constellation::enumerate: M must be in [1,8]");
    }
    const int n = 2 * num_antennas;

    Constellation cons;
    cons.num_antennas_ = num_antennas;

    // Every orbit has exactly 4 distinct members, so (3^{2M}-1)/4 subsets total.
    const std::size_t total_subsets = (pow3(n) - 1) / 4;
    std::vector<std::vector<SignalVector>> per_level(static_cast<std::size_t>(n) + 1);

    // Walk all vectors in lexicographic order (last entry fastest). The first
    // orbit member encountered is automatically the lexicographic minimum, so
    // a vector opens a new subset iff it is <= all three of its rotations.
    SignalVector x(n, -1);
    const std::size_t count = pow3(n);
    for (std::size_t code = 0; code < count; ++code) {
        if (code != 0) {
            for (int i = n - 1; i >= 0; --i) {
                if (x[i] < 1) {
                    ++x[i];
                    break;
                }
                x[i] = -1;
            }
        }
        const int u = power_level(x);
        if (u == 0) continue;

        SignalVector r = x;
        bool is_rep = true;
        for (int i = 0; i < 3 && is_rep; ++i) {
            r = rotate(r);
            is_rep = !std::lexicographical_compare(r.begin(), r.end(), x.begin(), x.end());
        }
        if (is_rep) per_level[static_cast<std::size_t>(u)].push_back(x);
    }

    cons.subsets_.reserve(total_subsets);
    cons.level_offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (int u = 1; u <= n; ++u) {
        cons.level_offsets_[static_cast<std::size_t>(u)] = cons.subsets_.size();
        int k = 1;
        for (auto& rep : per_level[static_cast<std::size_t>(u)]) {
            cons.subsets_.push_back(RotationalSubset{u, k++, std::move(rep)});
        }
    }
    cons.level_offsets_[static_cast<std::size_t>(n) + 1] = cons.subsets_.size();
    return cons;
}

const RotationalSubset& Constellation::subset(std::size_t linear_index) const {
    if (linear_index >= subsets_.size()) {
        throw std::out_of_range("Constellation::subset: index out of range");
    }
    return subsets_[linear_index];
}

std::size_t Constellation::level_count(int u) const {
    if (u < 1 || u > dims()) {
        throw std::out_of_range("Constellation::level_count: power level out of range");
    }
    return level_offsets_[static_cast<std::size_t>(u) + 1] -
           level_offsets_[static_cast<std::size_t>(u)];
}

std::size_t Constellation::level_offset(int u) const {
    if (u < 1 || u > dims()) {
        throw std::out_of_range("Constellation::level_offset: power level out of range");
    }
    return level_offsets_[static_cast<std::size_t>(u)];
}

std::size_t Constellation::linear_index(int u, int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > level_count(u)) {
        throw std::out_of_range("Constellation::linear_index: k out of range for level " +
                                std::to_string(u));
    }
    return level_offset(u) + static_cast<std::size_t>(k) - 1;
}

const RotationalSubset& Constellation::orbit_of(const SignalVector& x) const {
    check_signal(x);
    if (x.size() != static_cast<std::size_t>(dims())) {
        throw std::invalid_argument("orbit_of: dimension mismatch");
    }

    SignalVector rep = x;
    SignalVector r = x;
    for (int i = 0; i < 3; ++i) {
        r = rotate(r);
        if (std::lexicographical_compare(r.begin(), r.end(), rep.begin(), rep.end())) {
            rep = r;
        }
    }

    const int u = power_level(rep);
    const auto first = subsets_.begin() + static_cast<std::ptrdiff_t>(level_offset(u));
    const auto last = first + static_cast<std::ptrdiff_t>(level_count(u));
    auto it = std::lower_bound(first, last, rep, [](const RotationalSubset& s, const SignalVector& v) {
        return std::lexicographical_compare(s.representative.begin(), s.representative.end(),
                                            v.begin(), v.end());
    });
    if (it == last || it->representative != rep) {
        throw std::logic_error("orbit_of: representative not found");
    }
    return *it;
}

std::size_t Constellation::vector_count() const {
    return pow3(dims()) - 1;
}

std::size_t signal_index(const SignalVector& x) {
    check_signal(x);
    std::size_t code = 0;
    for (auto e : x) code = code * 3 + static_cast<std::size_t>(e + 1);
    const std::size_t zero_code = (pow3(static_cast<int>(x.size())) - 1) / 2;
    return code < zero_code ? code : code - 1;
}

SignalVector signal_at(int num_antennas, std::size_t index) {
    const int n = 2 * num_antennas;
    const std::size_t zero_code = (pow3(n) - 1) / 2;
    if (index + 1 >= pow3(n)) {
        throw std::out_of_range("signal_at: index out of range");
    }
    std::size_t code = index < zero_code ? index : index + 1;
    SignalVector x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        x[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(code % 3) - 1;
        code /= 3;
    }
    return x;
}

} // namespace onebit
