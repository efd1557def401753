#pragma once

// Adaptive embedded Dormand-Prince 5(4) integrator over flat complex arrays,
// with the classic 4th-order continuous extension for trajectory sampling.
// Sampling is interpolation only and never alters step selection.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "rydgate/errors.hpp"

namespace rydgate::ode {

using cplx = std::complex<double>;

struct Options {
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = 0.0;  // 0: no cap beyond the integration window
    double safety = 0.9;
};

struct Stats {
    std::int64_t steps_accepted = 0;
    std::int64_t steps_rejected = 0;
    std::int64_t rhs_evals = 0;
};

namespace dp5 {
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
// Continuous-extension weights (Hairer's dopri5 rcont5).
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;
}  // namespace dp5

class Dopri5 {
  public:
    explicit Dopri5(std::size_t n) : n_(n) {
        for (auto* v : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &ytmp_, &yerr_}) v->resize(n);
    }

    // Integrate y over [0, tspan]. `sample_times` must be ascending within
    // (0, tspan]; observer(t, y_at_t) is invoked for each. `segment` tags
    // stiffness errors.
    template <class RHS, class Observer>
    void integrate(RHS&& rhs, double tspan, cplx* y, const Options& opt, Stats& stats,
                   const std::vector<double>& sample_times, Observer&& observer, int segment) {
        if (tspan <= 0.0) throw DomainError("ode: integration span must be positive");
        const bool sampling = !sample_times.empty();
        if (sampling) {
            for (auto* v : {&rc1_, &rc2_, &rc3_, &rc4_, &rc5_}) v->resize(n_);
        }
        std::size_t next_sample = 0;

        double t = 0.0;
        rhs(t, y, k1_.data());
        ++stats.rhs_evals;
        const double max_step = opt.max_step > 0.0 ? std::min(opt.max_step, tspan) : tspan;
        double h = initial_step(rhs, y, stats, tspan, max_step, opt);
        const double h_floor = std::max(tspan * 1e-14, 1e-18);

        while (t < tspan) {
            if (tspan - t <= h_floor) break;  // terminal sliver, below resolution
            h = std::min(h, tspan - t);
            if (h < h_floor)
                throw StiffnessError("ode: step size underflow", segment);
            step(rhs, t, y, h, stats);

            const double err = error_norm(y, ytmp_.data(), yerr_.data(), opt);
            if (err <= 1.0) {
                const double t_new = t + h;
                if (sampling && next_sample < sample_times.size() &&
                    sample_times[next_sample] <= t_new + 1e-12 * tspan) {
                    prepare_dense(y, h);
                    while (next_sample < sample_times.size() &&
                           sample_times[next_sample] <= t_new + 1e-12 * tspan) {
                        const double ts = std::min(sample_times[next_sample], t_new);
                        dense_eval((ts - t) / h, ytmp_.data());
                        observer(ts, ytmp_.data());
                        ++next_sample;
                    }
                    // dense_eval clobbered ytmp_; restore the accepted state.
                    dense_eval(1.0, ytmp_.data());
                }
                std::copy(ytmp_.begin(), ytmp_.end(), y);
                std::swap(k1_, k7_);  // FSAL
                t = t_new;
                ++stats.steps_accepted;
                h *= std::clamp(opt.safety * std::pow(err, -0.2), 0.2, 5.0);
                h = std::min(h, max_step);
            } else {
                ++stats.steps_rejected;
                h *= std::max(0.2, opt.safety * std::pow(err, -0.2));
            }
        }
        while (sampling && next_sample < sample_times.size()) {
            observer(sample_times[next_sample], y);
            ++next_sample;
        }
    }

  private:
    template <class RHS>
    double initial_step(RHS&& rhs, const cplx* y, Stats& stats, double tspan, double max_step,
                        const Options& opt) {
        // Hairer-style h0 guess from the first derivative, then one probe.
        double d0 = 0, d1n = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            d0 += std::norm(y[i]) / (sc * sc);
            d1n += std::norm(k1_[i]) / (sc * sc);
        }
        d0 = std::sqrt(d0 / n_);
        d1n = std::sqrt(d1n / n_);
        double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 * tspan : 0.01 * d0 / d1n;
        h0 = std::min(h0, max_step);
        for (std::size_t i = 0; i < n_; ++i) ytmp_[i] = y[i] + h0 * k1_[i];
        rhs(h0, ytmp_.data(), k2_.data());
        ++stats.rhs_evals;
        double d2 = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            d2 += std::norm(k2_[i] - k1_[i]) / (sc * sc);
        }
        d2 = std::sqrt(d2 / n_) / h0;
        const double dmax = std::max(d1n, d2);
        const double h1 = dmax <= 1e-15 ? std::max(1e-6 * tspan, h0 * 1e-3)
                                        : std::pow(0.01 / dmax, 0.2);
        return std::min({100.0 * h0, h1, max_step});
    }

    template <class RHS>
    void step(RHS&& rhs, double t, const cplx* y, double h, Stats& stats) {
        using namespace dp5;
        auto* k1 = k1_.data(); auto* k2 = k2_.data(); auto* k3 = k3_.data();
        auto* k4 = k4_.data(); auto* k5 = k5_.data(); auto* k6 = k6_.data();
        auto* k7 = k7_.data(); auto* yt = ytmp_.data(); auto* ye = yerr_.data();

        for (std::size_t i = 0; i < n_; ++i) yt[i] = y[i] + h * (a21 * k1[i]);
        rhs(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < n_; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < n_; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < n_; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < n_; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (std::size_t i = 0; i < n_; ++i)
            yt[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, yt, k7);
        stats.rhs_evals += 6;
        for (std::size_t i = 0; i < n_; ++i)
            ye[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                         e7 * k7[i]);
    }

    double error_norm(const cplx* y0, const cplx* y1, const cplx* err, const Options& opt) const {
        double acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
            acc += std::norm(err[i]) / (sc * sc);
        }
        return std::sqrt(acc / n_);
    }

    void prepare_dense(const cplx* y0, double h) {
        using namespace dp5;
        for (std::size_t i = 0; i < n_; ++i) {
            const cplx dy = ytmp_[i] - y0[i];
            const cplx bspl = h * k1_[i] - dy;
            rc1_[i] = y0[i];
            rc2_[i] = dy;
            rc3_[i] = bspl;
            rc4_[i] = dy - h * k7_[i] - bspl;
            rc5_[i] = h * (d1 * k1_[i] + d3 * k3_[i] + d4 * k4_[i] + d5 * k5_[i] + d6 * k6_[i] +
                           d7 * k7_[i]);
        }
    }

    void dense_eval(double theta, cplx* out) const {
        const double th1 = 1.0 - theta;
        for (std::size_t i = 0; i < n_; ++i)
            out[i] = rc1_[i] +
                     theta * (rc2_[i] + th1 * (rc3_[i] + theta * (rc4_[i] + th1 * rc5_[i])));
    }

    std::size_t n_;
    std::vector<cplx> k1_, k2_, k3_, k4_, k5_, k6_, k7_, ytmp_, yerr_;
    std::vector<cplx> rc1_, rc2_, rc3_, rc4_, rc5_;
};

}  // namespace rydgate::ode
