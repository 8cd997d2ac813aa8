#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotvol/geometry.hpp"

namespace knotvol {

struct optimize_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An ideal n-bipyramid split along its central edge into n tetrahedra; the
/// i-th tetrahedron has angles (α_i, β_i, γ_i) with α_i at the central edge.
/// Feasibility: Σ α_i = 2π and each triple sums to π.
struct BipyramidShape {
    std::int64_t n = 0;
    std::vector<DihedralTriple> triples;

    static constexpr double alpha_sum_tolerance = 1e-10;

    void validate() const {
        if (n < 2 || static_cast<std::int64_t>(triples.size()) != n) {
            throw std::invalid_argument("BipyramidShape: need n >= 2 triples");
        }
        double asum = 0.0;
        for (const auto& t : triples) {
            t.validate();
            asum += t.alpha;
        }
        if (std::fabs(asum - 2.0 * std::numbers::pi) > alpha_sum_tolerance) {
            throw std::invalid_argument(
                "BipyramidShape: central angles must sum to 2*pi (got " +
                std::to_string(asum) + ")");
        }
    }
};

/// The regular shape: every tetrahedron is T(2π/n, (n−2)π/2n, (n−2)π/2n).
inline BipyramidShape regular_shape(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("regular_shape: n must be >= 2");
    const double pi = std::numbers::pi;
    const double alpha = 2.0 * pi / static_cast<double>(n);
    const double beta = (pi - alpha) / 2.0;
    BipyramidShape s;
    s.n = n;
    s.triples.assign(static_cast<std::size_t>(n), DihedralTriple{alpha, beta, beta});
    return s;
}

/// Total volume Σ_i vol(T_i) of a feasible shape.
inline double shape_volume(const BipyramidShape& s) {
    s.validate();
    double v = 0.0;
    for (const auto& t : s.triples) v += ideal_tetrahedron_volume(t);
    return v;
}

/// Residual of the first-order maximality system: zero iff β_i = γ_i for all
/// i and all ratios sin β_i / sin α_i agree.  Measured as the larger of the
/// worst β/γ gap and the spread of the ratios.
inline double stationarity_residual(const BipyramidShape& s) {
    s.validate();
    const double pi = std::numbers::pi;
    double bg = 0.0;
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = -rmin;
    for (const auto& t : s.triples) {
        if (t.alpha <= 0 || t.alpha >= pi || t.beta <= 0 || t.beta >= pi ||
            t.gamma <= 0 || t.gamma >= pi) {
            throw std::invalid_argument("stationarity_residual: boundary angle");
        }
        bg = std::max(bg, std::fabs(t.beta - t.gamma));
        const double r = std::sin(t.beta) / std::sin(t.alpha);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    return std::max(bg, rmax - rmin);
}

namespace detail {

/// The equality constraints eliminated: free variables
/// x = (α_1..α_{n−1}, β_1..β_n), with α_n = 2π − Σ α_i and γ_i = π − α_i − β_i.
/// The volume is concave on this affine slice, so a guarded Newton ascent
/// converges to the unique interior maximizer.
class ReducedProblem {
public:
    explicit ReducedProblem(std::int64_t n) : n_(static_cast<int>(n)) {
        if (n < 3) throw std::invalid_argument("ReducedProblem: n must be >= 3");
    }

    int dim() const { return 2 * n_ - 1; }
    int n() const { return n_; }

    std::vector<double> pack(const BipyramidShape& s) const {
        std::vector<double> x(static_cast<std::size_t>(dim()));
        for (int i = 0; i + 1 < n_; ++i) x[static_cast<std::size_t>(i)] = s.triples[static_cast<std::size_t>(i)].alpha;
        for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(n_ - 1 + i)] = s.triples[static_cast<std::size_t>(i)].beta;
        return x;
    }

    /// All 3n angles in the order α_1..α_n, β_1..β_n, γ_1..γ_n.
    std::vector<double> angles(const std::vector<double>& x) const {
        const double pi = std::numbers::pi;
        std::vector<double> th(static_cast<std::size_t>(3 * n_));
        double asum = 0.0;
        for (int i = 0; i + 1 < n_; ++i) {
            th[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
            asum += x[static_cast<std::size_t>(i)];
        }
        th[static_cast<std::size_t>(n_ - 1)] = 2.0 * pi - asum;
        for (int i = 0; i < n_; ++i) {
            th[static_cast<std::size_t>(n_ + i)] = x[static_cast<std::size_t>(n_ - 1 + i)];
            th[static_cast<std::size_t>(2 * n_ + i)] =
                pi - th[static_cast<std::size_t>(i)] - th[static_cast<std::size_t>(n_ + i)];
        }
        return th;
    }

    BipyramidShape unpack(const std::vector<double>& x) const {
        const auto th = angles(x);
        BipyramidShape s;
        s.n = n_;
        s.triples.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            s.triples[static_cast<std::size_t>(i)] = {th[static_cast<std::size_t>(i)],
                                                      th[static_cast<std::size_t>(n_ + i)],
                                                      th[static_cast<std::size_t>(2 * n_ + i)]};
        }
        return s;
    }

    double value(const std::vector<double>& x) const {
        double f = 0.0;
        for (double th : angles(x)) f += lobachevsky(th);
        return f;
    }

    std::vector<double> gradient(const std::vector<double>& x) const {
        const auto th = angles(x);
        auto lp = [&](int k) { return lobachevsky_derivative(th[static_cast<std::size_t>(k)]); };
        std::vector<double> g(static_cast<std::size_t>(dim()));
        const double lp_an = lp(n_ - 1);
        const double lp_gn = lp(3 * n_ - 1);
        for (int i = 0; i + 1 < n_; ++i) {
            g[static_cast<std::size_t>(i)] = lp(i) - lp(2 * n_ + i) - lp_an + lp_gn;
        }
        for (int i = 0; i < n_; ++i) {
            g[static_cast<std::size_t>(n_ - 1 + i)] = lp(n_ + i) - lp(2 * n_ + i);
        }
        return g;
    }

    /// Hessian via Λ''(θ) = −cot θ accumulated over the affine angle maps.
    std::vector<double> hessian(const std::vector<double>& x) const {
        const int m = dim();
        const auto th = angles(x);
        auto lpp = [&](int k) {
            return -1.0 / std::tan(th[static_cast<std::size_t>(k)]);
        };
        std::vector<double> H(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
        auto at = [&](int r, int c) -> double& {
            return H[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)];
        };
        for (int i = 0; i + 1 < n_; ++i) at(i, i) += lpp(i);               // alpha_i
        for (int i = 0; i < n_; ++i) at(n_ - 1 + i, n_ - 1 + i) += lpp(n_ + i);  // beta_i
        for (int i = 0; i + 1 < n_; ++i) {                                  // gamma_i, i<n
            const double w = lpp(2 * n_ + i);
            const int bi = n_ - 1 + i;
            at(i, i) += w;
            at(bi, bi) += w;
            at(i, bi) += w;
            at(bi, i) += w;
        }
        {
            const double w = lpp(n_ - 1);  // alpha_n = 2pi - sum alpha_i
            for (int i = 0; i + 1 < n_; ++i)
                for (int j = 0; j + 1 < n_; ++j) at(i, j) += w;
        }
        {
            // gamma_n = sum_{i<n} alpha_i - pi - beta_n
            const double w = lpp(3 * n_ - 1);
            const int bn = 2 * n_ - 2;
            for (int i = 0; i + 1 < n_; ++i) {
                for (int j = 0; j + 1 < n_; ++j) at(i, j) += w;
                at(i, bn) -= w;
                at(bn, i) -= w;
            }
            at(bn, bn) += w;
        }
        return H;
    }

private:
    int n_;
};

/// Solve A d = b for small dense symmetric A (row-major) by Gaussian
/// elimination with partial pivoting.  Returns false if singular.
inline bool solve_dense(std::vector<double> A, std::vector<double> b,
                        std::vector<double>& out, int m) {
    auto at = [&](int r, int c) -> double& {
        return A[static_cast<std::size_t>(r) * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)];
    };
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < m; ++k) {
        int piv = k;
        double best = std::fabs(at(k, k));
        for (int r = k + 1; r < m; ++r) {
            if (std::fabs(at(r, k)) > best) {
                best = std::fabs(at(r, k));
                piv = r;
            }
        }
        if (best < 1e-14) return false;
        if (piv != k) {
            for (int c = 0; c < m; ++c) std::swap(at(k, c), at(piv, c));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        }
        for (int r = k + 1; r < m; ++r) {
            const double f = at(r, k) / at(k, k);
            if (f == 0.0) continue;
            for (int c = k; c < m; ++c) at(r, c) -= f * at(k, c);
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(k)];
        }
    }
    out.assign(static_cast<std::size_t>(m), 0.0);
    for (int r = m - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < m; ++c) s -= at(r, c) * out[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = s / at(r, r);
    }
    return true;
}

}  // namespace detail

struct OptimizeOptions {
    double tolerance = 1e-10;
    int max_iterations = 500;
    double boundary_margin = 1e-6;  ///< angles kept in (margin, pi - margin)
    /// Called with every accepted iterate (feasibility instrumentation).
    std::function<void(const BipyramidShape&)> on_iterate;
};

struct OptimizeResult {
    BipyramidShape shape;
    double volume = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    bool hit_boundary = false;
};

/// Ascend from a strictly feasible start with a guarded Newton method:
/// Newton direction when the Hessian solve yields an ascent direction,
/// steepest ascent otherwise; a ratio test keeps every angle inside
/// (margin, π − margin) and an Armijo backtracking line search guarantees
/// monotone volume growth.
inline OptimizeResult maximize_from(const BipyramidShape& start, const OptimizeOptions& opts = {}) {
    start.validate();
    detail::ReducedProblem prob(start.n);
    const int m = prob.dim();
    const double pi = std::numbers::pi;
    const double eps = opts.boundary_margin;

    std::vector<double> x = prob.pack(start);
    double f = prob.value(x);

    OptimizeResult res;
    res.hit_boundary = false;

    auto report = [&](const std::vector<double>& xx) {
        if (opts.on_iterate) opts.on_iterate(prob.unpack(xx));
    };
    report(x);

    for (int it = 1; it <= opts.max_iterations; ++it) {
        res.iterations = it;
        const auto g = prob.gradient(x);

        // direction: Newton if usable, else gradient
        std::vector<double> d;
        bool have_newton = false;
        {
            auto H = prob.hessian(x);
            std::vector<double> rhs(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) rhs[i] = -g[i];
            have_newton = detail::solve_dense(std::move(H), std::move(rhs), d, m);
            if (have_newton) {
                double gd = 0.0;
                for (int i = 0; i < m; ++i) gd += g[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
                if (!(gd > 0.0)) have_newton = false;
            }
        }
        if (!have_newton) d = g;

        double gd = 0.0;
        double dnorm = 0.0;
        for (int i = 0; i < m; ++i) {
            gd += g[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
            dnorm = std::max(dnorm, std::fabs(d[static_cast<std::size_t>(i)]));
        }
        if (dnorm == 0.0) break;

        // ratio test: largest step keeping all angles in (eps, pi - eps)
        const auto th = prob.angles(x);
        auto slope_of = [&](int k) {
            // angle k's directional derivative along d
            if (k < prob.n() - 1) return d[static_cast<std::size_t>(k)];                      // alpha_i
            if (k == prob.n() - 1) {                                                          // alpha_n
                double s = 0.0;
                for (int i = 0; i + 1 < prob.n(); ++i) s -= d[static_cast<std::size_t>(i)];
                return s;
            }
            if (k < 2 * prob.n()) return d[static_cast<std::size_t>(prob.n() - 1 + (k - prob.n()))];  // beta_i
            const int i = k - 2 * prob.n();                                                   // gamma_i
            if (i + 1 < prob.n()) {
                return -d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(prob.n() - 1 + i)];
            }
            double s = 0.0;  // gamma_n = sum alpha_i - pi - beta_n
            for (int j = 0; j + 1 < prob.n(); ++j) s += d[static_cast<std::size_t>(j)];
            s -= d[static_cast<std::size_t>(2 * prob.n() - 2)];
            return s;
        };
        double t_max = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3 * prob.n(); ++k) {
            const double s = slope_of(k);
            const double v = th[static_cast<std::size_t>(k)];
            if (s < 0.0) t_max = std::min(t_max, (v - eps) / (-s));
            if (s > 0.0) t_max = std::min(t_max, (pi - eps - v) / s);
        }
        if (!(t_max > 1e-14)) {
            res.hit_boundary = true;
            break;
        }

        // Armijo backtracking
        double t = std::min(1.0, 0.9 * t_max);
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            std::vector<double> xn(x);
            for (int i = 0; i < m; ++i) xn[static_cast<std::size_t>(i)] += t * d[static_cast<std::size_t>(i)];
            const double fn = prob.value(xn);
            if (fn >= f + 1e-4 * t * gd) {
                const double df = fn - f;
                x = std::move(xn);
                f = fn;
                accepted = true;
                report(x);
                const double resid = stationarity_residual(prob.unpack(x));
                if (resid < opts.tolerance && df < opts.tolerance) {
                    res.converged = true;
                }
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            // no progress possible along d at this scale; treat as stationary
            res.converged = stationarity_residual(prob.unpack(x)) < opts.tolerance;
            break;
        }
        if (res.converged) break;
    }

    res.shape = prob.unpack(x);
    res.volume = shape_volume(res.shape);
    res.residual = stationarity_residual(res.shape);
    return res;
}

/// Draw a strictly feasible random shape: central angles from a normalized
/// exponential (Dirichlet) sample, β_i uniform with a safety margin.
template <class Rng>
BipyramidShape random_feasible_shape(std::int64_t n, Rng& rng, double margin = 1e-2) {
    if (n < 3) throw std::invalid_argument("random_feasible_shape: n must be >= 3");
    const double pi = std::numbers::pi;
    std::exponential_distribution<double> exp1(1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    BipyramidShape s;
    s.n = n;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<double> a(static_cast<std::size_t>(n));
        double sum = 0.0;
        for (auto& v : a) {
            v = exp1(rng) + 1e-12;
            sum += v;
        }
        bool ok = true;
        for (auto& v : a) {
            v *= 2.0 * pi / sum;
            if (v < margin || v > pi - margin) ok = false;
        }
        if (!ok) continue;
        // repair rounding: force exact 2*pi sum through the last angle
        double head = 0.0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) head += a[i];
        a.back() = 2.0 * pi - head;
        if (a.back() < margin || a.back() > pi - margin) continue;
        s.triples.clear();
        s.triples.reserve(static_cast<std::size_t>(n));
        for (double alpha : a) {
            const double lo = margin;
            const double hi = pi - alpha - margin;
            if (hi <= lo) {
                ok = false;
                break;
            }
            const double beta = lo + (hi - lo) * uni(rng);
            s.triples.push_back({alpha, beta, pi - alpha - beta});
        }
        if (!ok) continue;
        s.validate();
        return s;
    }
    throw optimize_error("random_feasible_shape: sampling failed");
}

/// Maximize the ideal n-bipyramid volume over all feasible shapes.  Restarts
/// from fresh random seeds if an ascent run stalls on the angle boundary.
/// Throws optimize_error when no run converges within max_iterations.
inline std::pair<BipyramidShape, double> maximize_volume(std::int64_t n, double tolerance,
                                                         int max_iterations) {
    if (n < 3) throw std::invalid_argument("maximize_volume: n must be >= 3");
    if (!(tolerance > 0)) throw std::invalid_argument("maximize_volume: tolerance must be positive");
    OptimizeOptions opts;
    opts.tolerance = tolerance;
    opts.max_iterations = max_iterations;
    std::mt19937_64 rng(0x6b6e6f74766f6cULL ^ static_cast<unsigned long long>(n));
    std::string last;
    for (int restart = 0; restart < 10; ++restart) {
        const BipyramidShape start = random_feasible_shape(n, rng);
        const OptimizeResult r = maximize_from(start, opts);
        if (r.converged) return {r.shape, r.volume};
        last = r.hit_boundary ? "stalled on the angle boundary"
                              : "did not converge in " + std::to_string(max_iterations) + " iterations";
    }
    throw optimize_error("maximize_volume(n=" + std::to_string(n) + "): " + last);
}

}  // namespace knotvol
