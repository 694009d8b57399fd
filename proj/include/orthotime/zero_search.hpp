#pragma once

// First-zero location for a scalar function sampled on an ascending grid.
// Handles both transversal crossings (sign change between samples) and
// tangential touches (a local minimum that only reaches zero), which is how
// the first orthogonality time appears for two-level systems.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace orthotime {

struct ZeroSearchOptions {
    double t_tol = 1e-12;  // bisection bracket width
    double f_tol = 0.0;    // keep bisecting until |f| <= f_tol as well (0 disables)
    double touch_tol = 0.0;  // refined local minimum at or below this is a root
    double lipschitz = std::numeric_limits<double>::infinity();
    int max_iter = 200;
};

struct ZeroHit {
    double t = 0.0;
    double f = 0.0;
    bool tangent = false;
    std::size_t anchor = 0;  // grid index whose reference was used for refinement
};

struct Minimum {
    double t = 0.0;
    double f = 0.0;
};

/// Shrinks [lo, hi] with f(lo) > 0 >= f(hi) and returns the endpoint with the
/// smaller |f|.
ZeroHit bisect_sign_change(const std::function<double(double)>& f, double lo, double hi,
                           double f_lo, double f_hi, const ZeroSearchOptions& opts);

/// Golden-section minimisation over [a, b].
Minimum golden_minimum(const std::function<double(double)>& f, double a, double b,
                       double t_tol, int max_iter = 200);

/// Incremental scanner: feed samples in ascending t with push(); a hit is
/// returned as soon as the first zero is pinned down. The factory builds the
/// function used for refinement anchored at a given grid index, so callers
/// whose evaluation depends on a per-sample reference can supply it.
class FirstZeroScan {
public:
    using Refiner = std::function<double(double)>;
    using RefinerFactory = std::function<Refiner(std::size_t anchor)>;

    FirstZeroScan(RefinerFactory factory, ZeroSearchOptions opts);

    std::optional<ZeroHit> push(double t, double f);

    /// Checks for a touch at the last sample once the grid is exhausted.
    std::optional<ZeroHit> finish();

    /// Smallest function value seen, including refined minima.
    double infimum() const noexcept { return infimum_; }
    std::size_t size() const noexcept { return t_.size(); }

private:
    std::optional<ZeroHit> refine_dip(std::size_t left, std::size_t right);

    RefinerFactory factory_;
    ZeroSearchOptions opts_;
    std::vector<double> t_;
    std::vector<double> f_;
    double infimum_ = std::numeric_limits<double>::infinity();
};

}  // namespace orthotime
