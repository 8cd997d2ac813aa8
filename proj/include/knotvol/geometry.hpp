#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "knotvol/lobachevsky.hpp"

namespace knotvol {

/// Dihedral angles of an ideal tetrahedron at one vertex; they determine the
/// isometry type.  Must sum to π with each angle in [0, π].
struct DihedralTriple {
    double alpha;
    double beta;
    double gamma;

    static constexpr double sum_tolerance = 1e-12;

    void validate() const {
        const double pi = std::numbers::pi;
        if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma))) {
            throw std::invalid_argument("DihedralTriple: non-finite angle");
        }
        if (alpha < 0 || alpha > pi || beta < 0 || beta > pi || gamma < 0 || gamma > pi) {
            throw std::invalid_argument("DihedralTriple: angle outside [0, pi]");
        }
        if (std::fabs(alpha + beta + gamma - pi) > sum_tolerance) {
            throw std::invalid_argument("DihedralTriple: angles must sum to pi (got " +
                                        std::to_string(alpha + beta + gamma) + ")");
        }
    }
};

/// Volume of the ideal tetrahedron with the given dihedral angles:
/// Λ(α) + Λ(β) + Λ(γ).  Flat (degenerate) tetrahedra give 0.
inline double ideal_tetrahedron_volume(const DihedralTriple& t) {
    t.validate();
    return lobachevsky(t.alpha) + lobachevsky(t.beta) + lobachevsky(t.gamma);
}

/// Volume of one apex tetrahedron of the regular ideal n-bipyramid:
/// T_n = T(2π/n, (n−2)π/2n, (n−2)π/2n).  n = 2 is flat.
inline double regular_apex_volume(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("regular_apex_volume: n must be >= 2");
    }
    const double pi = std::numbers::pi;
    const double alpha = 2.0 * pi / static_cast<double>(n);
    const double beta = (pi - alpha) / 2.0;  // == (n-2)pi/(2n)
    return ideal_tetrahedron_volume({alpha, beta, beta});
}

/// Volume of the regular ideal n-bipyramid: n isometric tetrahedra T_n glued
/// around a central edge.  Strictly increasing in n; vol(B_2) = 0 and
/// vol(B_4) is the regular ideal octahedron volume.
inline double regular_bipyramid_volume(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("regular_bipyramid_volume: n must be >= 2");
    }
    return static_cast<double>(n) * regular_apex_volume(n);
}

/// Logarithmic comparison bound 2π ln(n / divisor); valid divisors are 2
/// (always an upper bound for vol(B_n), n >= 3) and 2.1818 (the strengthened
/// version, which holds from n = 4 on).
inline double log_volume_bound(std::int64_t n, double divisor) {
    if (n < 3) {
        throw std::invalid_argument("log_volume_bound: n must be >= 3");
    }
    if (!(divisor > 0) || static_cast<double>(n) / divisor <= 1.0) {
        throw std::invalid_argument("log_volume_bound: n/divisor must exceed 1");
    }
    return 2.0 * std::numbers::pi * std::log(static_cast<double>(n) / divisor);
}

/// Reference volumes of the two regular ideal solids used throughout.
struct VolumeConstants {
    double v_tet;  ///< ideal regular tetrahedron, about 1.01494
    double v_oct;  ///< ideal regular octahedron, about 3.6638
};

inline const VolumeConstants& volume_constants() {
    static const VolumeConstants c = [] {
        const double pi3 = std::numbers::pi / 3.0;
        return VolumeConstants{ideal_tetrahedron_volume({pi3, pi3, pi3}),
                               regular_bipyramid_volume(4)};
    }();
    return c;
}

inline double v_tet() { return volume_constants().v_tet; }
inline double v_oct() { return volume_constants().v_oct; }

}  // namespace knotvol
