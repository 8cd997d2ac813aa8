#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotvol {

/// Lobachevsky function  Λ(θ) = −∫₀^θ ln|2 sin t| dt.
///
/// Λ is odd and π-periodic; its maximum on [0, π] is Λ(π/6).  The volume of
/// an ideal hyperbolic tetrahedron with dihedral angles α, β, γ (summing to
/// π) is Λ(α) + Λ(β) + Λ(γ).
///
/// Evaluation: reduce to |θ| ≤ π/2 by periodicity and oddness, then use the
/// series  Λ(θ) = θ − θ ln(2θ) + θ Σ_{n≥1} ζ(2n)/(n(2n+1)) (θ/π)^{2n},
/// obtained by integrating ln(sin t / t) term by term.  With |θ/π| ≤ 1/2 the
/// terms decay like 4^{-n}, giving full double accuracy well inside the
/// 1e-9 target.
inline double lobachevsky(double theta) {
    if (!std::isfinite(theta)) {
        throw std::domain_error("lobachevsky: non-finite argument");
    }
    constexpr int terms = 32;
    // zeta_coeff[n-1] = zeta(2n) / (n(2n+1))
    static const auto zeta_coeff = [] {
        std::array<double, terms> c{};
        for (int n = 1; n <= terms; ++n) {
            c[n - 1] = std::riemann_zeta(2.0 * n) / (n * (2.0 * n + 1.0));
        }
        return c;
    }();

    const double pi = std::numbers::pi;
    double r = std::remainder(theta, pi);  // in [-pi/2, pi/2]
    if (r == 0.0) return 0.0;
    const double sign = r < 0 ? -1.0 : 1.0;
    const double x = std::fabs(r);

    const double q = (x / pi) * (x / pi);
    double p = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= terms; ++n) {
        p *= q;
        const double term = zeta_coeff[n - 1] * p;
        sum += term;
        if (term < 1e-18) break;
    }
    return sign * (x - x * std::log(2.0 * x) + x * sum);
}

/// d/dθ Λ(θ) = −ln(2 sin θ), defined for θ with sin θ ≠ 0.
inline double lobachevsky_derivative(double theta) {
    const double s = std::sin(theta);
    if (s == 0.0) {
        throw std::domain_error("lobachevsky_derivative: sin(theta) == 0");
    }
    return -std::log(std::fabs(2.0 * s));
}

}  // namespace knotvol
