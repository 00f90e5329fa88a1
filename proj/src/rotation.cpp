#include "latjl/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace latjl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kVerifyMargin = 1e-9;

double dist2d_to_lattice(double a, double b, double l0) {
    double ea = a - std::round(a * l0) / l0;
    double eb = b - std::round(b * l0) / l0;
    return std::sqrt(ea * ea + eb * eb);
}

/// Worst 2D sub-distance over the block's points at angle theta.
double block_cost(const std::vector<std::pair<double, double>>& pts, double theta,
                  double l0) {
    double c = std::cos(theta), s = std::sin(theta);
    double worst = 0;
    for (const auto& [a, b] : pts)
        worst = std::max(worst, dist2d_to_lattice(c * a - s * b, s * a + c * b, l0));
    return worst;
}

long next_pow2(double x) {
    long p = 1;
    while (p < x) p <<= 1;
    return p;
}
}  // namespace

std::string to_string(RotationStrategy s) {
    switch (s) {
        case RotationStrategy::identity: return "identity";
        case RotationStrategy::per_block_grid: return "per_block_grid";
        case RotationStrategy::gaussian_integer_hint: return "gaussian_integer_hint";
    }
    return "?";
}

std::pair<double, std::vector<double>> lattice_distance_profile(
    const std::vector<std::vector<double>>& points, const Int& lambda0) {
    std::vector<double> per_point(points.size());
    double worst = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        per_point[i] = rounding_distance(points[i], lambda0);
        worst = std::max(worst, per_point[i]);
    }
    return {worst, per_point};
}

RotationWitness search_rotation(const std::vector<std::vector<double>>& points,
                                const Int& lambda0, double delta,
                                const RotationSearchBudget& budget) {
    if (points.empty()) throw Error("search_rotation needs at least one point");
    int k = static_cast<int>(points[0].size());
    if (k % 2 != 0 || k < 2) throw Error("search_rotation needs even k >= 2");
    if (delta <= 0) throw Error("delta must be positive");
    double l0 = lambda0.convert_to<double>();
    double delta_search = delta - 2 * kVerifyMargin;

    auto [identity_max, identity_profile] = lattice_distance_profile(points, lambda0);

    RotationWitness w;
    w.target = delta;
    w.rotation = BlockRotation::identity(k);

    if (delta_search > 0 && identity_max <= delta_search) {
        w.strategy = RotationStrategy::identity;
        w.achieved = identity_max;
        if (!verify_witness(w, points, lambda0))
            throw RotationNotFound(identity_max);
        return w;
    }

    int nblocks = k / 2;
    double delta_block = std::max(delta_search, 0.0) / std::sqrt(static_cast<double>(nblocks));
    double coarsest_sigma = 0;
    bool hint_won = false;

    for (int bidx = 0; bidx < nblocks; ++bidx) {
        std::vector<std::pair<double, double>> bp(points.size());
        double r_max = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            bp[i] = {points[i][2 * bidx], points[i][2 * bidx + 1]};
            r_max = std::max(r_max, std::hypot(bp[i].first, bp[i].second));
        }
        if (r_max == 0) { w.rotation.angles[bidx] = 0; continue; }

        double sigma = delta_block > 0 ? delta_block / (2 * r_max) : 0;
        long steps = sigma > 0 ? next_pow2(kTwoPi / sigma) : budget.grid_points_per_block;
        steps = std::min(steps, std::max(budget.grid_points_per_block, 2L));
        double sigma_eff = kTwoPi / static_cast<double>(steps);
        coarsest_sigma = std::max(coarsest_sigma, sigma_eff);

        double best_cost = block_cost(bp, 0.0, l0);
        double best_theta = 0.0;
        for (long i = 1; i < steps; ++i) {
            double theta = sigma_eff * static_cast<double>(i);
            double c = block_cost(bp, theta, l0);
            if (c < best_cost) { best_cost = c; best_theta = theta; }
        }

        if (budget.gaussian_hints) {
            // Angles sending the block's largest point toward a nearby lattice
            // direction: arg(a+bi) with a^2+b^2 near (lambda0*r)^2.
            std::size_t top = 0;
            for (std::size_t i = 1; i < bp.size(); ++i)
                if (std::hypot(bp[i].first, bp[i].second) >
                    std::hypot(bp[top].first, bp[top].second))
                    top = i;
            double r = std::hypot(bp[top].first, bp[top].second);
            double phi0 = std::atan2(bp[top].second, bp[top].first);
            long m0 = std::lround(l0 * r * l0 * r);
            int candidates = 0;
            for (long m = std::max(1L, m0 - 2); m <= m0 + 2 && candidates < 500; ++m) {
                long amax = static_cast<long>(std::sqrt(static_cast<double>(m))) + 1;
                for (long a = 0; a <= amax; ++a) {
                    long b2 = m - a * a;
                    if (b2 < 0) break;
                    long b = std::lround(std::sqrt(static_cast<double>(b2)));
                    if (b * b != b2) continue;
                    ++candidates;
                    double theta = std::fmod(std::atan2(static_cast<double>(b),
                                                        static_cast<double>(a)) -
                                                 phi0 + 2 * kTwoPi,
                                             kTwoPi);
                    double c = block_cost(bp, theta, l0);
                    if (c < best_cost) {
                        best_cost = c;
                        best_theta = theta;
                        hint_won = true;
                    }
                }
            }
        }
        w.rotation.angles[bidx] = best_theta;
    }

    w.strategy = hint_won ? RotationStrategy::gaussian_integer_hint
                          : RotationStrategy::per_block_grid;
    w.grid_resolution = coarsest_sigma;

    double achieved = 0;
    for (const auto& p : points)
        achieved = std::max(achieved,
                            rounding_distance(apply_block_rotation(w.rotation, p), lambda0));
    // fall back to identity if the blockwise choice aggregates worse
    if (identity_max < achieved) {
        w.rotation = BlockRotation::identity(k);
        achieved = identity_max;
    }
    w.achieved = achieved;

    if (delta_search <= 0 || achieved > delta_search || !verify_witness(w, points, lambda0))
        throw RotationNotFound(achieved);
    return w;
}

bool verify_witness(const RotationWitness& w,
                    const std::vector<std::vector<double>>& points,
                    const Int& lambda0) {
    long double l0 = lambda0.convert_to<long double>();
    long double worst = 0;
    for (const auto& p : points) {
        std::vector<long double> v(p.begin(), p.end());
        std::vector<long double> r = apply_block_rotation_ext(w.rotation, v);
        long double s = 0;
        for (long double x : r) {
            long double e = x - roundl(x * l0) / l0;
            s += e * e;
        }
        worst = std::max(worst, sqrtl(s));
    }
    return worst <= static_cast<long double>(w.target) - kVerifyMargin;
}

}  // namespace latjl
