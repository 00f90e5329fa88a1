#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latjl/diophantine.hpp"

#include <cmath>

using namespace latjl;

namespace {

/// Brute-force smallest n <= limit with |n*t - round(n*t)| < bound.
std::pair<long long, long long> brute_min_n(double t, double bound, long long limit) {
    for (long long n = 1; n <= limit; ++n) {
        double v = t * n;
        if (std::abs(v - std::round(v)) < bound)
            return {n, static_cast<long long>(std::llround(v))};
    }
    return {-1, 0};
}

}  // namespace

TEST_CASE("continued fraction of 1/sqrt(2)") {
    auto cf = continued_fraction(ValueDescriptor::inv_sqrt(2), 8);
    CHECK(cf.partial_quotients[0] == 0);
    CHECK(cf.partial_quotients[1] == 1);
    for (int i = 2; i < 8; ++i) CHECK(cf.partial_quotients[i] == 2);
    CHECK_FALSE(cf.terminated);
    CHECK(cf.period_length.has_value());
}

TEST_CASE("continued fraction of sqrt(2)") {
    auto cf = continued_fraction(ValueDescriptor::sqrt(2), 6);
    CHECK(cf.partial_quotients[0] == 1);
    for (int i = 1; i < 6; ++i) CHECK(cf.partial_quotients[i] == 2);
}

TEST_CASE("rational expansion terminates") {
    auto cf = continued_fraction(ValueDescriptor::make_rational(Rat(1, 2)), 10);
    CHECK(cf.terminated);
    CHECK(cf.partial_quotients == std::vector<Int>{Int(0), Int(2)});
    CHECK(cf.convergents.back() == std::make_pair(Int(1), Int(2)));
}

TEST_CASE("convergent recurrence and quality |t - p/q| < 1/q^2") {
    for (auto t : {ValueDescriptor::inv_sqrt(2), ValueDescriptor::inv_sqrt(3),
                   ValueDescriptor::sqrt(5)}) {
        auto cf = continued_fraction(t, 12);
        auto [lo, hi] = t.bracket(128);
        for (std::size_t m = 0; m < cf.convergents.size(); ++m) {
            auto [p, q] = cf.convergents[m];
            if (m >= 2) {
                CHECK(p == cf.partial_quotients[m] * cf.convergents[m - 1].first +
                               cf.convergents[m - 2].first);
                CHECK(q == cf.partial_quotients[m] * cf.convergents[m - 1].second +
                               cf.convergents[m - 2].second);
            }
            if (q < 1) continue;
            // interval check of the classical bound
            Rat err_lo = lo - Rat(p, q), err_hi = hi - Rat(p, q);
            Rat abs_hi = std::max(boost::multiprecision::abs(err_lo),
                                  boost::multiprecision::abs(err_hi));
            CHECK(abs_hi < Rat(1, q * q));
        }
    }
}

TEST_CASE("convergents tighten: |q*t - p| < 1/q_next") {
    auto cf = continued_fraction(ValueDescriptor::inv_sqrt(5), 10);
    auto [lo, hi] = ValueDescriptor::inv_sqrt(5).bracket(128);
    for (std::size_t m = 0; m + 1 < cf.convergents.size(); ++m) {
        auto [p, q] = cf.convergents[m];
        auto q_next = cf.convergents[m + 1].second;
        if (q < 1 || q_next < 1) continue;
        Rat a = Rat(q) * lo - p, b = Rat(q) * hi - p;
        Rat abs_hi = std::max(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
        CHECK(abs_hi < Rat(1, q_next));
    }
}

TEST_CASE("find_scaling frozen example: 1/sqrt(2) at 0.05") {
    auto w = find_scaling(ValueDescriptor::inv_sqrt(2), Rat(1, 20), Rat(1));
    CHECK(w.n1 == 17);
    CHECK(w.p == 12);
    CHECK(w.achieved == doctest::Approx(0.0208152801713).epsilon(1e-9));
    CHECK(verify_witness_interval(w));
}

TEST_CASE("find_scaling rational shortcut") {
    auto w = find_scaling(ValueDescriptor::make_rational(Rat(1, 2)), Rat(1, 3), Rat(1));
    CHECK(w.n1 == 2);
    CHECK(w.p == 1);
    CHECK(w.achieved == 0.0);
}

TEST_CASE("find_scaling matches brute force minimum") {
    struct Case { unsigned k; Rat bound; };
    for (const auto& c : {Case{2, Rat(1, 20)}, Case{2, Rat(1, 100)}, Case{3, Rat(1, 20)},
                          Case{3, Rat(1, 100)}, Case{5, Rat(1, 20)}, Case{5, Rat(1, 100)}}) {
        auto t = ValueDescriptor::inv_sqrt(c.k);
        auto w = find_scaling(t, c.bound, Rat(1));
        auto [bn, bp] = brute_min_n(t.approx(), to_double(c.bound), 10000);
        CHECK(w.n1 == bn);
        CHECK(w.p == bp);
        CHECK(verify_witness_interval(w, 128));
    }
}

TEST_CASE("witness whose error exceeds the bound fails interval verification") {
    ScalingWitness w;
    w.t = ValueDescriptor::inv_sqrt(2);
    w.n1 = 7;
    w.p = 5;
    w.bound = Rat(1, 20);  // |7/sqrt(2) - 5| = 0.0503 > 0.05
    CHECK_FALSE(verify_witness_interval(w));
}

TEST_CASE("per-coordinate aggregation bound of the scaling error") {
    auto t = ValueDescriptor::inv_sqrt(3);
    auto [lo, hi] = t.bracket(128);
    Int n1 = 71, p = 41;
    for (long long q = -12; q <= 12; ++q) {
        // |n1*t*q - p*q| <= |n1*t - p| * |q|, exact on the interval endpoints
        Rat base_hi = std::max(boost::multiprecision::abs(Rat(n1) * lo - p),
                               boost::multiprecision::abs(Rat(n1) * hi - p));
        Rat coord_hi = std::max(boost::multiprecision::abs((Rat(n1) * lo - p) * q),
                                boost::multiprecision::abs((Rat(n1) * hi - p) * q));
        CHECK(coord_hi <= base_hi * (q < 0 ? -q : q));
    }
}

TEST_CASE("scaling_lattice_distance") {
    // S = {t*(1,0), t*(0,1)} for t = 1/sqrt(2), as exact scaled vectors
    ScaledVector e1{{Int(1), Int(0)}, Int(1), 2};
    ScaledVector e2{{Int(0), Int(1)}, Int(1), 2};
    double d = scaling_lattice_distance({e1, e2}, ValueDescriptor::inv_sqrt(2), Int(17));
    CHECK(d == doctest::Approx(0.0208152801713).epsilon(1e-9));

    CHECK(scaling_lattice_distance({e1, e2}, ValueDescriptor::inv_sqrt(2), Int(0)) ==
          doctest::Approx(0.0));

    // rational t: scaling by the denominator lands exactly
    ScaledVector r1{{Int(1), Int(3)}, Int(2), 0};  // (1/2, 3/2) in (1/2)Z^2
    double dr = scaling_lattice_distance({r1}, ValueDescriptor::make_rational(Rat(1, 2)),
                                         Int(2));
    CHECK(dr == doctest::Approx(0.0));

    // membership violation: (1/3, 0) is not in (1/2)Z^2
    ScaledVector bad{{Int(1), Int(0)}, Int(3), 0};
    CHECK_THROWS_AS(scaling_lattice_distance({bad}, ValueDescriptor::make_rational(Rat(1, 2)),
                                             Int(2)),
                    MembershipViolation);
}
