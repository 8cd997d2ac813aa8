#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <vector>

#include "knotvol/bounds.hpp"
#include "knotvol/geometry.hpp"
#include "knotvol/optimize.hpp"

namespace knotvol {

/// Published regular-bipyramid volumes used as the numeric ground truth.
struct BipyramidTableRow {
    std::int64_t n;
    double volume;
};

inline const std::vector<BipyramidTableRow>& bipyramid_table() {
    static const std::vector<BipyramidTableRow> rows = {
        {2, 0.0},         {3, 2.0298},     {4, 3.6638},   {5, 4.9867},  {6, 6.0896},
        {7, 7.0325},      {8, 7.8549},     {9, 8.5836},   {10, 9.2375}, {11, 9.8304},
        {12, 10.3725},    {13, 10.8719},   {14, 11.3347}, {20, 13.5668},
        {100, 23.6709},   {1000, 38.1382}, {1000000, 81.5409}, {1000000000, 124.944},
    };
    return rows;
}

/// Numeric verification of the geometry and maximization claims: the
/// published volume table, the drop-constant identities, the logarithmic
/// growth bounds, and optimizer convergence to the regular shape.  Prints one
/// line per check; returns the number of failures.
inline int verify_geometry(std::ostream& os) {
    int failures = 0;
    auto check = [&](const std::string& name, double residual, double tol) {
        const bool ok = residual <= tol;
        if (!ok) ++failures;
        os << (ok ? "ok   " : "FAIL ") << name << "  residual=" << std::scientific
           << std::setprecision(3) << residual << " tol=" << tol << std::defaultfloat << '\n';
    };
    auto check_that = [&](const std::string& name, bool ok) {
        if (!ok) ++failures;
        os << (ok ? "ok   " : "FAIL ") << name << '\n';
    };

    for (const auto& row : bipyramid_table()) {
        check("table vol(B_" + std::to_string(row.n) + ")",
              std::fabs(regular_bipyramid_volume(row.n) - row.volume), 1e-3);
    }

    check("vol(B_4) = v_oct", std::fabs(regular_bipyramid_volume(4) - v_oct()), 1e-9);
    check("vol(B_6) = 6 v_tet", std::fabs(regular_bipyramid_volume(6) - 6.0 * v_tet()), 1e-9);

    const double b4 = regular_bipyramid_volume(4), b6 = regular_bipyramid_volume(6),
                 b7 = regular_bipyramid_volume(7), b8 = regular_bipyramid_volume(8),
                 b9 = regular_bipyramid_volume(9), b10 = regular_bipyramid_volume(10);
    check("2 vol(B_8) + vol(B_6) - v_tet - vol(B_4) - vol(B_7) = 10.088",
          std::fabs(2 * b8 + b6 - v_tet() - b4 - b7 - 10.088), 1e-3);
    check("2 vol(B_10) + vol(B_6) - 2 v_tet - vol(B_4) - vol(B_9) = 10.2873",
          std::fabs(2 * b10 + b6 - 2 * v_tet() - b4 - b9 - 10.2873), 1e-3);
    check("2 vol(B_6) - v_tet = 11 v_tet", std::fabs(2 * b6 - v_tet() - 11 * v_tet()), 1e-3);
    check("10 v_tet + 3 (vol(B_10) - vol(B_9)) = 12.111",
          std::fabs(10 * v_tet() + 3 * (b10 - b9) - 12.111), 1e-3);
    check("7 v_oct - 10 v_tet = 15.4972 (known rounding)",
          std::fabs(7 * v_oct() - 10 * v_tet() - 15.4972), 5e-3);

    {
        bool ok2 = true, ok21818 = true;
        // 200-point log grid over [3, 1e6]
        for (int i = 0; i < 200; ++i) {
            const double x = std::exp(std::log(3.0) +
                                      (std::log(1e6) - std::log(3.0)) * i / 199.0);
            const std::int64_t n = std::llround(x);
            const double v = regular_bipyramid_volume(n);
            if (!(v < log_volume_bound(n, 2.0))) ok2 = false;
            if (n >= 4 && !(v < log_volume_bound(n, 2.1818))) ok21818 = false;
        }
        check_that("vol(B_n) < 2 pi ln(n/2) on a 200-point log grid of [3, 1e6]", ok2);
        check_that("vol(B_n) < 2 pi ln(n/2.1818) for the sampled n >= 4", ok21818);
        const double ratio =
            regular_bipyramid_volume(1000000000) / log_volume_bound(1000000000, 2.0);
        check_that("vol(B_1e9) / (2 pi ln(5e8)) in (0.99, 1)", ratio > 0.99 && ratio < 1.0);
    }

    for (std::int64_t n : {3, 4, 5, 8, 13}) {
        try {
            const auto [shape, vol] = maximize_volume(n, 1e-9, 400);
            check("optimizer n=" + std::to_string(n) + " reaches the regular volume",
                  std::fabs(vol - regular_bipyramid_volume(n)), 1e-6);
        } catch (const optimize_error& e) {
            check_that(std::string("optimizer n=") + std::to_string(n) + ": " + e.what(), false);
        }
    }

    os << (failures == 0 ? "all checks passed\n"
                         : std::to_string(failures) + " check(s) failed\n");
    return failures;
}

}  // namespace knotvol
