#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace onebit {

/// A channel input: length-2M vector over {-1,0,+1}, first M entries the
/// in-phase components, last M the quadrature components.
using SignalVector = std::vector<std::int8_t>;

/// Number of nonzero entries, i.e. the instantaneous transmit power ||x||^2.
int power_level(const SignalVector& x);

/// 90-degree rotation: y = Rx with R = [[0,-I],[I,0]].
SignalVector rotate(const SignalVector& x);

/// Full 2Mx2M rotation matrix, mostly useful for checking identities.
std::vector<std::vector<int>> rotation_matrix(int num_antennas);

/// Complex view: entry m = x_m + j x_{M+m}.
std::vector<std::complex<double>> complexify(const SignalVector& x);

/// One 4-element orbit of the 90-degree rotation. All members share the power
/// level u and the antenna activation pattern; the representative is the
/// lexicographically smallest member (entrywise, -1 < 0 < +1).
struct RotationalSubset {
    int u = 0;
    int k = 0;
    SignalVector representative;

    std::array<SignalVector, 4> members() const;
};

/// Every nonzero vector of {-1,0,+1}^{2M}, partitioned into rotational
/// subsets. Subsets are ordered by power level u ascending, then by
/// lexicographic order of their representatives; k is the 1-based rank within
/// the power level. Immutable after construction.
class Constellation {
public:
    /// Enumerates the full input set for 1 <= M <= 8.
    static Constellation enumerate(int num_antennas);

    int num_antennas() const { return num_antennas_; }
    int dims() const { return 2 * num_antennas_; }

    std::size_t subset_count() const { return subsets_.size(); }
    const std::vector<RotationalSubset>& subsets() const { return subsets_; }
    const RotationalSubset& subset(std::size_t linear_index) const;

    /// Number of subsets K_u at power level u.
    std::size_t level_count(int u) const;
    /// Index of the first subset with power level u.
    std::size_t level_offset(int u) const;

    /// 0-based position of subset (u,k) in the global ordering.
    std::size_t linear_index(int u, int k) const;

    /// The unique subset containing x. Throws for the all-zero vector or a
    /// dimension mismatch.
    const RotationalSubset& orbit_of(const SignalVector& x) const;

    /// Total vector count, 3^{2M} - 1.
    std::size_t vector_count() const;

private:
    int num_antennas_ = 0;
    std::vector<RotationalSubset> subsets_;
    std::vector<std::size_t> level_offsets_; // indexed by u, size 2M+2
};

/// Dense 0-based index of a nonzero vector among all 3^{2M}-1 inputs, in
/// lexicographic order (entrywise, -1 < 0 < +1). Inverse of signal_at.
std::size_t signal_index(const SignalVector& x);
SignalVector signal_at(int num_antennas, std::size_t index);

} // namespace onebit
