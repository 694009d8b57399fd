#include "orthotime/discriminate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "orthotime/bounds.hpp"
#include "orthotime/phase_kernels.hpp"
#include "orthotime/zero_search.hpp"

namespace orthotime {

namespace {

void require_same_dim(const HermitianOperator& ha, const HermitianOperator& hb) {
    if (ha.dim() != hb.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "Hamiltonians have dimensions " + std::to_string(ha.dim()) + " and " +
                        std::to_string(hb.dim()));
    }
}

bool is_flat(const HermitianOperator& h) { return h.traceless().matrix().norm() == 0.0; }

}  // namespace

UnitaryMatrix product_unitary(const HermitianOperator& ha, const HermitianOperator& hb, double t) {
    require_same_dim(ha, hb);
    return expm_i(-hb, t) * expm_i(ha, t);
}

PhaseSpectrum phase_spectrum(const HermitianOperator& ha, const HermitianOperator& hb, double t) {
    EigenSystem es = unitary_eig(product_unitary(ha, hb, t));
    return {t, std::move(es.values), std::move(es.vectors)};
}

CircularGap max_circular_gap(const RealVector& phases) {
    const Eigen::Index d = phases.size();
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "max_circular_gap: no phases");
    CircularGap best{2.0 * kPi - (phases(d - 1) - phases(0)), {d - 1, 0}};
    for (Eigen::Index k = 0; k + 1 < d; ++k) {
        const double gap = phases(k + 1) - phases(k);
        if (gap > best.gap) best = {gap, {k, k + 1}};
    }
    return best;
}

double cluster_center(const RealVector& phases) {
    const CircularGap g = max_circular_gap(phases);
    // The occupied arc runs counter-clockwise from the gap's upper end.
    return wrap_phase(phases(g.pair.second) + 0.5 * (2.0 * kPi - g.gap));
}

ClusterExtent cluster_extent(const RealVector& phases, double reference) {
    ClusterExtent ext;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        const double rel = wrap_phase(phases(k) - reference);
        if (rel < lo) {
            lo = rel;
            ext.ends.first = k;
        }
        if (rel > hi) {
            hi = rel;
            ext.ends.second = k;
        }
    }
    ext.spread = hi - lo;
    return ext;
}

ComplexVector orthogonal_state(const UnitaryMatrix& frame, IndexPair pair, double alpha) {
    const Eigen::Index d = frame.dim();
    const auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= d || j >= d) {
        throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(i) + ", " +
                                                    std::to_string(j) + ") outside dimension " +
                                                    std::to_string(d));
    }
    if (i == j) throw Error(ErrorCode::InvalidArgument, "orthogonal_state needs two distinct indices");
    ComplexVector v = ComplexVector::Zero(d);
    v(i) = 1.0;
    v(j) = std::polar(1.0, alpha);
    return frame.matrix() * v / std::sqrt(2.0);
}

Complex bracket(const ComplexVector& psi, const HermitianOperator& ha, const HermitianOperator& hb,
                double t, const Tolerances& tol) {
    require_same_dim(ha, hb);
    if (psi.size() != ha.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state length does not match the Hamiltonians");
    }
    if (std::abs(psi.norm() - 1.0) > tol.normalization) {
        throw Error(ErrorCode::NotNormalized, "state norm " + std::to_string(psi.norm()));
    }
    return psi.dot(product_unitary(ha, hb, t).matrix() * psi);
}

SearchOutcome find_t_perp(const HermitianOperator& ha, const HermitianOperator& hb,
                          const SearchOptions& opts) {
    require_same_dim(ha, hb);
    SearchOutcome out;

    // Scalar parts only contribute a global phase to the product.
    const HermitianOperator a0 = ha.traceless();
    const HermitianOperator b0 = hb.traceless();

    if (opts.t_max) {
        if (!(*opts.t_max > 0.0)) throw Error(ErrorCode::BadRange, "t_max must be positive");
        out.t_max = *opts.t_max;
    } else if (is_flat(ha) && is_flat(hb)) {
        out.g_infimum = kPi;
        return out;
    } else {
        out.t_max = 100.0 * span_lower_bound(ha, hb);
    }

    const double spans = half_span(ha) + half_span(hb);
    double step = out.t_max / 2000.0;
    if (spans > 0.0) step = std::min(step, kPi / (16.0 * spans));
    if (opts.scan_step) {
        if (!(*opts.scan_step > 0.0)) throw Error(ErrorCode::BadRange, "scan_step must be positive");
        step = *opts.scan_step;
    }
    const double refine_tol = opts.refine_tol.value_or(1e-10 * out.t_max);
    if (!(refine_tol > 0.0)) throw Error(ErrorCode::BadRange, "refine_tol must be positive");

    const auto n_steps =
        static_cast<std::size_t>(std::max(1.0, std::ceil(out.t_max / step - 1e-9)));
    out.scan_step = out.t_max / static_cast<double>(n_steps);

    const ProductPropagator prop(a0, b0);
    const double lipschitz = 2.0 * (a0.matrix().norm() + b0.matrix().norm());

    // Each sample is measured against the cluster centre of the sample before
    // it, so the spread keeps growing past pi instead of folding back.
    std::vector<double> centers;
    centers.reserve(n_steps + 1);
    auto refiner_for = [&](std::size_t anchor) {
        const double ref = centers[anchor];
        return [&prop, ref](double t) { return kPi - cluster_extent(prop.sorted_phases(t), ref).spread; };
    };

    ZeroSearchOptions zopts;
    zopts.t_tol = refine_tol;
    zopts.f_tol = opts.phase_tol;
    zopts.touch_tol = opts.touch_tol;
    zopts.lipschitz = lipschitz;
    FirstZeroScan scan(refiner_for, zopts);

    std::optional<ZeroHit> hit;
    double g_min = std::numeric_limits<double>::infinity();
    double g_prev = 0.0;
    const std::size_t chunk = std::max<std::size_t>(1, opts.chunk);
    std::vector<double> times;
    for (std::size_t start = 0; start <= n_steps && !hit; start += chunk) {
        const std::size_t stop = std::min(n_steps + 1, start + chunk);
        times.clear();
        for (std::size_t k = start; k < stop; ++k) {
            times.push_back(out.t_max * static_cast<double>(k) / static_cast<double>(n_steps));
        }
        const std::vector<RealVector> phases = sample_phases(prop, times, opts.exec);
        for (std::size_t m = 0; m < phases.size(); ++m) {
            const std::size_t k = start + m;
            const double g = max_circular_gap(phases[m]).gap - kPi;
            if (k > 0 && std::abs(g - g_prev) > lipschitz * out.scan_step * (1.0 + 1e-9) + 1e-12) {
                ++out.lipschitz_flags;
            }
            g_prev = g;
            g_min = std::min(g_min, g);
            const double ref = k == 0 ? cluster_center(phases[m]) : centers.back();
            const double f = kPi - cluster_extent(phases[m], ref).spread;
            centers.push_back(cluster_center(phases[m]));
            ++out.samples;
            hit = scan.push(times[m], f);
            if (hit) break;
        }
    }
    if (!hit) hit = scan.finish();
    out.g_infimum = std::min(g_min, scan.infimum());
    if (!hit) return out;

    DiscriminationResult res;
    res.t_perp = hit->t;
    res.tangent = hit->tangent;
    res.alpha = opts.alpha;
    EigenSystem es = unitary_eig(prop.at(res.t_perp));
    res.pair = cluster_extent(es.values, centers[hit->anchor]).ends;
    res.state = orthogonal_state(es.vectors, res.pair, opts.alpha);
    res.phases = std::move(es.values);
    res.residual = std::abs(bracket(res.state, ha, hb, res.t_perp, opts.tol));
    out.result = std::move(res);
    return out;
}

}  // namespace orthotime
