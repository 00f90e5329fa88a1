#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latjl/geometry.hpp"

#include <cmath>

using namespace latjl;

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Brute-force optimal radius: smallest max-distance over circumcenters of all
/// support subsets of size <= k+1. Valid for tiny n.
double brute_meb_radius(const std::vector<std::vector<double>>& pts) {
    std::size_t n = pts.size();
    double best = 1e300;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() > pts[0].size() + 1) continue;
        std::vector<std::vector<double>> sub;
        for (auto i : idx) sub.push_back(pts[i]);
        EnclosingBall b = minimal_enclosing_ball(sub, 1e-9);
        double r = 0;
        bool ok = true;
        for (const auto& p : pts) r = std::max(r, dist(b.center, p));
        if (ok) best = std::min(best, r);
    }
    return best;
}

}  // namespace

TEST_CASE("two-point diameter") {
    auto b = minimal_enclosing_ball({{0, 0}, {2, 0}});
    CHECK(b.center[0] == doctest::Approx(1.0));
    CHECK(b.center[1] == doctest::Approx(0.0));
    CHECK(b.radius == doctest::Approx(1.0));
}

TEST_CASE("unit square") {
    auto b = minimal_enclosing_ball({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(b.center[0] == doctest::Approx(0.5));
    CHECK(b.center[1] == doctest::Approx(0.5));
    CHECK(b.radius == doctest::Approx(std::sqrt(2.0) / 2));
}

TEST_CASE("single point") {
    auto b = minimal_enclosing_ball({{3, 4, 5}});
    CHECK(b.radius == doctest::Approx(0.0));
    CHECK(b.center[0] == doctest::Approx(3.0));
}

TEST_CASE("random points in k=6: containment and non-support stability") {
    SplitMix64 rng(13);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> p(6);
        for (auto& x : p) x = (static_cast<double>(rng.next_below(2001)) - 1000.0) / 250.0;
        pts.push_back(p);
    }
    auto b = minimal_enclosing_ball(pts);
    for (const auto& p : pts) CHECK(dist(b.center, p) <= b.radius + 1e-9);

    // removing a non-support interior point leaves the ball unchanged
    std::size_t interior = 0;
    bool found = false;
    for (std::size_t i = 0; i < pts.size() && !found; ++i)
        if (dist(b.center, pts[i]) < b.radius - 1e-6) { interior = i; found = true; }
    REQUIRE(found);
    auto reduced = pts;
    reduced.erase(reduced.begin() + static_cast<long>(interior));
    auto b2 = minimal_enclosing_ball(reduced);
    CHECK(b2.radius == doctest::Approx(b.radius).epsilon(1e-9));
    CHECK(dist(b.center, b2.center) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("optimality against subset brute force at small n") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 7; ++i) {
            std::vector<double> p(3);
            for (auto& x : p) x = (static_cast<double>(rng.next_below(1001)) - 500.0) / 100.0;
            pts.push_back(p);
        }
        auto b = minimal_enclosing_ball(pts);
        CHECK(b.radius == doctest::Approx(brute_meb_radius(pts)).epsilon(1e-7));
    }
}

TEST_CASE("core-set path covers large n") {
    SplitMix64 rng(19);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 200; ++i) {
        std::vector<double> p(4);
        for (auto& x : p) x = (static_cast<double>(rng.next_below(1001)) - 500.0) / 100.0;
        pts.push_back(p);
    }
    auto b = minimal_enclosing_ball(pts, 1e-3);
    for (const auto& p : pts) CHECK(dist(b.center, p) <= b.radius + 1e-9);
    // radius within tolerance of the exact answer on the same input
    auto sub = pts;
    sub.resize(50);
    auto exact_sub = minimal_enclosing_ball(sub);
    CHECK(b.radius >= exact_sub.radius - 1e-9);
}

TEST_CASE("snap center: already on the lattice") {
    // center (1/sqrt(2), 0) is on (1/sqrt(2))Z^2 for lambda0 = 1, k = 2
    double c = 1.0 / std::sqrt(2.0);
    EnclosingBall ball{{c, 0.0}, 0.5, {}, 0};
    auto snap = snap_center_to_lattice(ball, Int(1), 2);
    CHECK(snap.numerators == std::vector<Int>{Int(1), Int(0)});
}

TEST_CASE("snap center: nearest of four surrounding lattice points") {
    EnclosingBall ball{{0.3, 0.4}, 1.0, {}, 0};
    auto snap = snap_center_to_lattice(ball, Int(1), 2);
    // brute force over the surrounding cell of (1/sqrt(2))Z^2
    double step = 1.0 / std::sqrt(2.0);
    double best = 1e300;
    std::vector<long long> best_z;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b) {
            double d = std::hypot(0.3 - a * step, 0.4 - b * step);
            if (d < best) { best = d; best_z = {a, b}; }
        }
    CHECK(snap.numerators[0] == Int(best_z[0]));
    CHECK(snap.numerators[1] == Int(best_z[1]));
    // snap distance never exceeds half a lattice cell diagonal
    CHECK(best <= 0.5 + 1e-12);
}

TEST_CASE("centering translation preserves exact pairwise distances") {
    std::vector<ScaledVector> ys;
    SplitMix64 rng(23);
    for (int i = 0; i < 5; ++i) {
        ScaledVector y;
        y.denominator = 2;
        y.irrational_k = 6;
        for (int j = 0; j < 6; ++j) y.numerators.push_back(Int(rng.next_in(-20, 20)));
        ys.push_back(y);
    }
    std::vector<std::vector<double>> doubles;
    for (const auto& y : ys) doubles.push_back(y.to_doubles());
    auto ball = minimal_enclosing_ball(doubles);
    auto snap = snap_center_to_lattice(ball, Int(2), 6);
    auto centered = ys;
    for (auto& y : centered)
        for (int j = 0; j < 6; ++j) y.numerators[j] -= snap.numerators[j];
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j)
            CHECK(exact_sq_distance(ys[i], ys[j]) ==
                  exact_sq_distance(centered[i], centered[j]));
    // post-centering bound: radius + 1/(2*lambda0)
    double n_flat = ball.radius + 0.25;
    for (const auto& y : centered)
        CHECK(std::sqrt(to_double(y.sq_norm())) <= n_flat + 1e-9);
}

TEST_CASE("block rotations") {
    auto id = BlockRotation::identity(4);
    std::vector<double> v{1, 2, 3, 4};
    CHECK(apply_block_rotation(id, v) == v);

    BlockRotation quarter{{M_PI / 2}, 2};
    auto r = apply_block_rotation(quarter, {1, 0});
    CHECK(r[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(1.0));

    CHECK_THROWS_AS(apply_block_rotation(quarter, {1, 0, 0}), DimensionMismatch);
}

TEST_CASE("rotations preserve norms") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 2 * (1 + static_cast<int>(rng.next_below(4)));
        BlockRotation rho;
        rho.k = k;
        for (int j = 0; j < k / 2; ++j)
            rho.angles.push_back(static_cast<double>(rng.next_below(1000000)) * 2 * M_PI / 1e6);
        std::vector<double> v(k);
        for (auto& x : v) x = (static_cast<double>(rng.next_below(2001)) - 1000.0) / 100.0;
        auto r = apply_block_rotation(rho, v);
        double n1 = 0, n2 = 0;
        for (int j = 0; j < k; ++j) { n1 += v[j] * v[j]; n2 += r[j] * r[j]; }
        CHECK(n2 == doctest::Approx(n1).epsilon(1e-12));
    }
}
