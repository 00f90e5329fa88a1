#include "latjl/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <list>

namespace latjl {

namespace {

/// Circumscribed ball of up to k+1 affinely independent support points:
/// min-norm solution of the equidistance system in the affine hull.
EnclosingBall ball_from_support(const std::vector<std::vector<double>>& pts,
                                const std::vector<std::size_t>& support) {
    EnclosingBall b;
    b.support_indices = support;
    if (support.empty()) {
        b.radius = -1.0;  // sentinel: contains nothing
        return b;
    }
    const auto& p0 = pts[support[0]];
    std::size_t k = p0.size();
    b.center = p0;
    if (support.size() > 1) {
        std::size_t m = support.size() - 1;
        Eigen::MatrixXd A(m, k);
        Eigen::VectorXd rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            double sq = 0;
            for (std::size_t j = 0; j < k; ++j) {
                double d = pts[support[i + 1]][j] - p0[j];
                A(i, j) = d;
                sq += d * d;
            }
            rhs(i) = sq / 2;
        }
        Eigen::VectorXd y = A.completeOrthogonalDecomposition().solve(rhs);
        for (std::size_t j = 0; j < k; ++j) b.center[j] = p0[j] + y(j);
    }
    double r2 = 0;
    for (std::size_t idx : support) {
        double s = 0;
        for (std::size_t j = 0; j < k; ++j) {
            double d = pts[idx][j] - b.center[j];
            s += d * d;
        }
        r2 = std::max(r2, s);
    }
    b.radius = std::sqrt(r2);
    return b;
}

double dist_to(const std::vector<double>& c, const std::vector<double>& p) {
    double s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        double d = p[j] - c[j];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Welzl's move-to-front recursion; deterministic (no shuffling).
EnclosingBall welzl_mtf(const std::vector<std::vector<double>>& pts,
                        std::list<std::size_t>& order,
                        std::list<std::size_t>::iterator end,
                        std::vector<std::size_t>& support, std::size_t max_support) {
    EnclosingBall ball = ball_from_support(pts, support);
    if (support.size() == max_support) return ball;
    for (auto it = order.begin(); it != end;) {
        auto next = std::next(it);
        std::size_t idx = *it;
        double slack = ball.radius < 0 ? 0 : ball.radius * 1e-12 + 1e-12;
        if (ball.radius < 0 || dist_to(ball.center, pts[idx]) > ball.radius + slack) {
            support.push_back(idx);
            ball = welzl_mtf(pts, order, it, support, max_support);
            support.pop_back();
            order.splice(order.begin(), order, it);
        }
        it = next;
    }
    return ball;
}

EnclosingBall core_set_meb(const std::vector<std::vector<double>>& pts, double tol) {
    std::size_t n = pts.size(), k = pts[0].size();
    long iters = static_cast<long>(std::ceil(1.0 / tol));
    iters = std::min(iters, 100000L);
    std::vector<double> c = pts[0];
    for (long i = 1; i <= iters; ++i) {
        // farthest point, ties to the smallest index
        std::size_t far = 0;
        double best = -1;
        for (std::size_t p = 0; p < n; ++p) {
            double d = dist_to(c, pts[p]);
            if (d > best) { best = d; far = p; }
        }
        double step = 1.0 / (i + 1);
        for (std::size_t j = 0; j < k; ++j) c[j] += (pts[far][j] - c[j]) * step;
    }
    EnclosingBall b;
    b.center = c;
    double r = 0;
    std::size_t far = 0;
    for (std::size_t p = 0; p < n; ++p) {
        double d = dist_to(c, pts[p]);
        if (d > r) { r = d; far = p; }
    }
    b.radius = r;
    b.support_indices = {far};
    b.tolerance = std::max(tol, 1.0 / iters) * (1 + r);
    return b;
}

}  // namespace

EnclosingBall minimal_enclosing_ball(const std::vector<std::vector<double>>& points,
                                     double tol) {
    if (points.empty()) throw Error("minimal_enclosing_ball needs n >= 1");
    if (tol <= 0) throw Error("tol must be positive");
    std::size_t k = points[0].size();
    for (const auto& p : points)
        if (p.size() != k) throw DimensionMismatch("inconsistent point dimensions");

    if (points.size() <= 50) {
        std::list<std::size_t> order;
        for (std::size_t i = 0; i < points.size(); ++i) order.push_back(i);
        std::vector<std::size_t> support;
        EnclosingBall b = welzl_mtf(points, order, order.end(), support, k + 1);
        // recover the support set: points on the boundary
        b.support_indices.clear();
        double eps = b.radius * 1e-9 + 1e-12;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (std::abs(dist_to(b.center, points[i]) - b.radius) <= eps)
                b.support_indices.push_back(i);
        b.tolerance = eps;
        return b;
    }
    return core_set_meb(points, tol);
}

ScaledVector snap_center_to_lattice(const EnclosingBall& ball, const Int& lambda0,
                                    int k) {
    if (static_cast<int>(ball.center.size()) != k)
        throw DimensionMismatch("ball dimension does not match k");
    double scale = lambda0.convert_to<double>() * std::sqrt(static_cast<double>(k));
    ScaledVector c;
    c.denominator = lambda0;
    c.irrational_k = static_cast<unsigned>(k);
    c.numerators.resize(k);
    for (int j = 0; j < k; ++j)
        c.numerators[j] = Int(static_cast<long long>(std::llround(ball.center[j] * scale)));
    return c;
}

std::vector<double> apply_block_rotation(const BlockRotation& rho,
                                         const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != rho.k || rho.k % 2 != 0)
        throw DimensionMismatch("vector length must equal the (even) rotation dimension");
    std::vector<double> out(v.size());
    for (int j = 0; j < rho.k / 2; ++j) {
        double c = std::cos(rho.angles[j]), s = std::sin(rho.angles[j]);
        double a = v[2 * j], b = v[2 * j + 1];
        out[2 * j] = c * a - s * b;
        out[2 * j + 1] = s * a + c * b;
    }
    return out;
}

std::vector<long double> apply_block_rotation_ext(const BlockRotation& rho,
                                                  const std::vector<long double>& v) {
    if (static_cast<int>(v.size()) != rho.k || rho.k % 2 != 0)
        throw DimensionMismatch("vector length must equal the (even) rotation dimension");
    std::vector<long double> out(v.size());
    for (int j = 0; j < rho.k / 2; ++j) {
        long double c = cosl(static_cast<long double>(rho.angles[j]));
        long double s = sinl(static_cast<long double>(rho.angles[j]));
        long double a = v[2 * j], b = v[2 * j + 1];
        out[2 * j] = c * a - s * b;
        out[2 * j + 1] = s * a + c * b;
    }
    return out;
}

}  // namespace latjl
