#pragma once

// Internal numerical helpers shared by the kernel modules.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "helly/errors.hpp"

namespace helly::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    return w < 0.0 ? w + kTwoPi : w;
}

/// Root of f on [a, b] where f(a), f(b) have opposite signs (or one is zero).
template <class F>
double bracketed_root(F&& f, double a, double b, double fa, double fb, int max_iter) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    auto tol = boost::math::tools::eps_tolerance<double>(52);
    auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    return 0.5 * (lo + hi);
}

/// Local minimizer of f on [a, b]; returns {argmin, min}.
template <class F>
std::pair<double, double> minimize_1d(F&& f, double a, double b, int max_iter) {
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    return boost::math::tools::brent_find_minima(f, a, b, std::numeric_limits<double>::digits, iters);
}

struct MarchOptions {
    int samples = 1024;
    int max_samples = 8192;
    double zero_tol = 1e-9;   ///< |f| at or below this counts as a root
    double dip_factor = 10.0; ///< resample when a same-sign minimum dips below dip_factor*zero_tol
    int max_iter = 128;
};

/// All roots of a continuous function on the periodic interval [0, 2*pi):
/// sign changes are bracketed and refined; every sampled local extremum of
/// constant sign is refined by 1-D minimization of |f|, which recovers
/// tangencies and closely spaced root pairs that fall between samples.
template <class F>
std::vector<double> periodic_roots(F&& f, const MarchOptions& opt) {
    int n = opt.samples;
    std::vector<double> ts;
    std::vector<double> fs;
    for (;;) {
        ts.resize(static_cast<std::size_t>(n));
        fs.resize(static_cast<std::size_t>(n));
        double dip = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            ts[i] = kTwoPi * i / n;
            fs[i] = f(ts[i]);
        }
        for (int i = 0; i < n; ++i) {
            double prev = fs[(i + n - 1) % n];
            double next = fs[(i + 1) % n];
            if (fs[i] * prev > 0.0 && fs[i] * next > 0.0 && std::abs(fs[i]) <= std::abs(prev) &&
                std::abs(fs[i]) <= std::abs(next)) {
                dip = std::min(dip, std::abs(fs[i]));
            }
        }
        if (dip < opt.dip_factor * opt.zero_tol && dip > opt.zero_tol && n < opt.max_samples) {
            n *= 2;
            continue;
        }
        break;
    }

    std::vector<double> roots;
    auto root_between = [&](double a, double b, double fa, double fb) {
        double r = bracketed_root(f, a, b, fa, fb, opt.max_iter);
        roots.push_back(wrap_angle(r));
    };
    const double step = kTwoPi / n;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        double a = ts[i];
        double b = (j == 0) ? kTwoPi : ts[j];
        if (fs[i] == 0.0) {
            roots.push_back(a);
            continue;
        }
        if (fs[i] * fs[j] < 0.0) {
            root_between(a, b, fs[i], fs[j]);
            continue;
        }
        double prev = fs[(i + n - 1) % n];
        if (fs[i] * prev > 0.0 && fs[i] * fs[j] > 0.0 && std::abs(fs[i]) <= std::abs(prev) &&
            std::abs(fs[i]) <= std::abs(fs[j])) {
            // Same-sign local extremum of |f|: look for a hidden double crossing.
            double sgn = fs[i] > 0.0 ? 1.0 : -1.0;
            double lo = a - step;
            double hi = a + step;
            auto [tm, fm] = minimize_1d([&](double t) { return sgn * f(t); }, lo, hi, opt.max_iter);
            double value = sgn * fm;
            if (value * sgn < 0.0) {
                double flo = f(lo);
                double fhi = f(hi);
                root_between(lo, tm, flo, value);
                root_between(tm, hi, value, fhi);
            } else if (std::abs(value) <= opt.zero_tol) {
                roots.push_back(wrap_angle(tm));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Derivative-free minimizer for small dimensions (standard Nelder-Mead).
template <std::size_t N, class F>
std::pair<std::array<double, N>, double> nelder_mead(F&& f, std::array<double, N> x0, double scale, int max_iter,
                                                     double ftol = 1e-15) {
    using P = std::array<double, N>;
    std::array<P, N + 1> simplex;
    std::array<double, N + 1> values;
    simplex[0] = x0;
    for (std::size_t i = 0; i < N; ++i) {
        simplex[i + 1] = x0;
        simplex[i + 1][i] += scale;
    }
    for (std::size_t i = 0; i <= N; ++i) values[i] = f(simplex[i]);

    auto combine = [](const P& a, const P& b, double t) {
        P r;
        for (std::size_t k = 0; k < N; ++k) r[k] = a[k] + t * (b[k] - a[k]);
        return r;
    };
    for (int iter = 0; iter < max_iter; ++iter) {
        std::array<std::size_t, N + 1> order;
        for (std::size_t i = 0; i <= N; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::array<P, N + 1> s2;
        std::array<double, N + 1> v2;
        for (std::size_t i = 0; i <= N; ++i) {
            s2[i] = simplex[order[i]];
            v2[i] = values[order[i]];
        }
        simplex = s2;
        values = v2;
        if (std::abs(values[N] - values[0]) <= ftol * (1.0 + std::abs(values[0]))) break;

        P centroid{};
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) centroid[k] += simplex[i][k] / static_cast<double>(N);

        P reflected = combine(centroid, simplex[N], -1.0);
        double fr = f(reflected);
        if (fr < values[0]) {
            P expanded = combine(centroid, simplex[N], -2.0);
            double fe = f(expanded);
            if (fe < fr) {
                simplex[N] = expanded;
                values[N] = fe;
            } else {
                simplex[N] = reflected;
                values[N] = fr;
            }
        } else if (fr < values[N - 1]) {
            simplex[N] = reflected;
            values[N] = fr;
        } else {
            bool outside = fr < values[N];
            P contracted = outside ? combine(centroid, reflected, 0.5) : combine(centroid, simplex[N], 0.5);
            double fc = f(contracted);
            if (fc < (outside ? fr : values[N])) {
                simplex[N] = contracted;
                values[N] = fc;
            } else {
                for (std::size_t i = 1; i <= N; ++i) {
                    simplex[i] = combine(simplex[0], simplex[i], 0.5);
                    values[i] = f(simplex[i]);
                }
            }
        }
    }
    std::size_t best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    return {simplex[best], values[best]};
}

}  // namespace helly::detail
