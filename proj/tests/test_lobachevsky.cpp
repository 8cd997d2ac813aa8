#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "knotvol/lobachevsky.hpp"
#include "support/quadrature.hpp"

using knotvol::lobachevsky;
using knotvol::lobachevsky_derivative;
using std::numbers::pi;

TEST_CASE("lobachevsky vanishes at 0 and pi") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::fabs(lobachevsky(pi)) < 1e-12);
    CHECK(std::fabs(lobachevsky(pi / 2)) < 1e-12);
}

TEST_CASE("lobachevsky at pi/6 matches the quadrature oracle") {
    const double q = oracle::lobachevsky_quadrature(pi / 6);
    CHECK(std::fabs(lobachevsky(pi / 6) - q) < 1e-9);
    CHECK(std::fabs(lobachevsky(pi / 6) - 0.5074708) < 1e-7);
}

TEST_CASE("lobachevsky matches quadrature across [0, pi]") {
    // includes points hugging both endpoints, where the integrand is singular
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double theta;
        if (i < 10) {
            theta = std::pow(10.0, -1.0 - i) * pi;      // near 0
        } else if (i < 20) {
            theta = pi * (1.0 - std::pow(10.0, -(i - 9.0)));  // near pi
        } else {
            theta = uni(rng) * pi;
        }
        const double q = oracle::lobachevsky_quadrature(theta);
        INFO("theta = " << theta);
        CHECK(std::fabs(lobachevsky(theta) - q) < 1e-9);
    }
}

TEST_CASE("lobachevsky is odd and pi-periodic") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-10.0 * pi, 10.0 * pi);
    for (int i = 0; i < 1000; ++i) {
        const double t = uni(rng);
        CHECK(std::fabs(lobachevsky(-t) + lobachevsky(t)) < 1e-9);
        CHECK(std::fabs(lobachevsky(t + pi) - lobachevsky(t)) < 1e-9);
    }
}

TEST_CASE("lobachevsky attains its maximum at pi/6") {
    const double peak = lobachevsky(pi / 6);
    for (int i = 0; i <= 10000; ++i) {
        const double t = pi * i / 10000.0;
        CHECK(lobachevsky(t) <= peak + 1e-15);
    }
}

TEST_CASE("lobachevsky rejects non-finite input") {
    CHECK_THROWS_AS(lobachevsky(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(lobachevsky(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("derivative of lobachevsky is -ln(2 sin theta)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> uni(0.05, pi - 0.05);
    for (int i = 0; i < 200; ++i) {
        const double t = uni(rng);
        const double h = 1e-6;
        const double fd = (lobachevsky(t + h) - lobachevsky(t - h)) / (2 * h);
        CHECK(std::fabs(fd - lobachevsky_derivative(t)) < 1e-6);
    }
    CHECK_THROWS_AS(lobachevsky_derivative(0.0), std::domain_error);
}
