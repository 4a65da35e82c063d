#include "onebit/math.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using onebit::binary_entropy;
using onebit::q_function;

TEST_CASE("gaussian tail anchor values") {
    CHECK(q_function(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q_function(40.0) < 1e-300);
    // frozen reference for Q(1), cross-checked against quadrature below
    CHECK(std::abs(q_function(1.0) - 0.15865525393145705) < 1e-15);
}

TEST_CASE("gaussian tail matches quadrature across the central range") {
    for (int i = 0; i <= 320; ++i) {
        const double t = -8.0 + 0.05 * i;
        CHECK(std::abs(q_function(t) - oracle::gaussian_tail(t)) < 1e-14);
    }
}

TEST_CASE("gaussian tail keeps relative accuracy far out") {
    for (const double t : {9.0, 12.0, 17.0, 25.0, 33.0, 37.0}) {
        const double ref = oracle::gaussian_tail(t);
        CHECK(std::abs(q_function(t) - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("gaussian tail symmetry and monotonicity") {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 100; ++i) {
        const double t = -10.0 + 0.2 * i;
        const double q = q_function(t);
        // below about -8.3 the tail saturates to 1 in double precision, so
        // strictness is only meaningful past that point
        if (t >= -8.0) {
            CHECK(q < prev);
        } else {
            CHECK(q <= prev);
        }
        CHECK(std::abs(q + q_function(-t) - 1.0) <= 1e-14);
        prev = q;
    }
}

TEST_CASE("gaussian tail rejects non-finite input") {
    CHECK_THROWS_AS(q_function(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(q_function(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(q_function(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("binary entropy anchor values") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(std::abs(binary_entropy(0.25) - 0.8112781244591328) < 1e-15);
}

TEST_CASE("binary entropy matches direct evaluation and is symmetric") {
    for (int i = 1; i < 200; ++i) {
        const double p = i / 200.0;
        CHECK(binary_entropy(p) == doctest::Approx(oracle::entropy_direct(p)).epsilon(1e-14));
        CHECK(binary_entropy(p) == doctest::Approx(binary_entropy(1.0 - p)).epsilon(1e-14));
        CHECK(binary_entropy(p) <= 1.0);
    }
}

TEST_CASE("binary entropy clamps float dust at the endpoints") {
    CHECK(binary_entropy(1e-13) == 0.0);
    CHECK(binary_entropy(-5e-13) == 0.0);
    CHECK(binary_entropy(1.0 - 1e-13) == 0.0);
    CHECK(binary_entropy(1.0 + 5e-13) == 0.0);
}

TEST_CASE("binary entropy rejects probabilities beyond tolerance") {
    CHECK_THROWS_AS(binary_entropy(-1e-9), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.0 + 1e-9), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(2.0), std::domain_error);
}

TEST_CASE("entropy of the tail is non-increasing in the squared argument") {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100; ++i) {
        const double x = std::pow(10.0, -6.0 + 9.0 * i / 99.0);
        const double value = binary_entropy(q_function(std::sqrt(x)));
        CHECK(value <= prev + 1e-15);
        prev = value;
    }
}
