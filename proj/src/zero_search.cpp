#include "orthotime/zero_search.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace orthotime {

ZeroHit bisect_sign_change(const std::function<double(double)>& f, double lo, double hi,
                           double f_lo, double f_hi, const ZeroSearchOptions& opts) {
    for (int it = 0; it < opts.max_iter; ++it) {
        const bool narrow = (hi - lo) <= opts.t_tol;
        const bool small = opts.f_tol <= 0.0 || std::min(std::abs(f_lo), std::abs(f_hi)) <= opts.f_tol;
        if (narrow && small) break;
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (f_mid <= 0.0) {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    if (std::abs(f_lo) < std::abs(f_hi)) return {lo, f_lo, false, 0};
    return {hi, f_hi, false, 0};
}

Minimum golden_minimum(const std::function<double(double)>& f, double a, double b, double t_tol,
                       int max_iter) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    const double floor_tol = 4.0 * std::sqrt(std::numeric_limits<double>::epsilon());
    for (int it = 0; it < max_iter; ++it) {
        if ((b - a) <= std::max(t_tol, floor_tol * std::max(std::abs(a), std::abs(b)))) break;
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

FirstZeroScan::FirstZeroScan(RefinerFactory factory, ZeroSearchOptions opts)
    : factory_(std::move(factory)), opts_(opts) {}

std::optional<ZeroHit> FirstZeroScan::refine_dip(std::size_t left, std::size_t right) {
    const Refiner f = factory_(left);
    const Minimum m = golden_minimum(f, t_[left], t_[right], opts_.t_tol, opts_.max_iter);
    infimum_ = std::min(infimum_, m.f);
    if (m.f <= 0.0) {
        ZeroHit hit = bisect_sign_change(f, t_[left], m.t, f_[left], m.f, opts_);
        hit.anchor = left;
        return hit;
    }
    if (m.f <= opts_.touch_tol) return ZeroHit{m.t, m.f, true, left};
    return std::nullopt;
}

std::optional<ZeroHit> FirstZeroScan::push(double t, double f) {
    t_.push_back(t);
    f_.push_back(f);
    infimum_ = std::min(infimum_, f);
    const std::size_t k = t_.size() - 1;
    if (k == 0) {
        if (f <= 0.0) return ZeroHit{t, f, false, 0};
        return std::nullopt;
    }
    if (f <= 0.0) {
        const Refiner g = factory_(k - 1);
        ZeroHit hit = bisect_sign_change(g, t_[k - 1], t, f_[k - 1], f, opts_);
        hit.anchor = k - 1;
        return hit;
    }
    if (k >= 2) {
        const double fm = f_[k - 1];
        const double h = t_[k] - t_[k - 2];
        if (fm <= f_[k - 2] && fm <= f && fm <= opts_.lipschitz * h) {
            return refine_dip(k - 2, k);
        }
    }
    return std::nullopt;
}

std::optional<ZeroHit> FirstZeroScan::finish() {
    const std::size_t n = t_.size();
    if (n < 2) return std::nullopt;
    const double last = f_[n - 1];
    if (last <= opts_.touch_tol) return ZeroHit{t_[n - 1], last, true, n - 2};
    if (last <= f_[n - 2] && last <= opts_.lipschitz * (t_[n - 1] - t_[n - 2])) {
        return refine_dip(n - 2, n - 1);
    }
    return std::nullopt;
}

}  // namespace orthotime
