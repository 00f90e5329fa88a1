#include "latjl/projection.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

namespace latjl {

namespace {
using BigFloat = boost::multiprecision::cpp_bin_float_50;

int smallest_even_at_least(const BigFloat& x) {
    BigFloat c = boost::multiprecision::ceil(x);
    long long v = c.convert_to<long long>();
    if (v < 2) v = 2;
    if (v % 2 != 0) ++v;
    return static_cast<int>(v);
}
}  // namespace

int choose_k(int n, const Rat& epsilon, std::optional<double> c_override) {
    if (n < 2) throw Error("choose_k needs n >= 2");
    if (!(epsilon > 0 && epsilon < Rat(1, 2)))
        throw EpsilonOutOfRange("choose_k needs epsilon in (0, 1/2)");
    BigFloat eps = BigFloat(boost::multiprecision::numerator(epsilon).str()) /
                   BigFloat(boost::multiprecision::denominator(epsilon).str());
    BigFloat ln_n = boost::multiprecision::log(BigFloat(n));
    BigFloat target;
    if (c_override) {
        target = BigFloat(*c_override) * ln_n / (eps * eps);
    } else {
        target = 4 * ln_n / (eps * eps / 2 - eps * eps * eps / 3);
    }
    return smallest_even_at_least(target);
}

ProjectionMatrix sample_projection(int d, int k, std::uint64_t seed) {
    if (d < 1) throw Error("d must be >= 1");
    if (k < 2 || k % 2 != 0) throw Error("k must be even and >= 2");
    ProjectionMatrix R;
    R.k = k;
    R.d = d;
    R.seed = seed;
    R.entries.resize(static_cast<std::size_t>(k) * d);
    SplitMix64 rng(seed);
    for (auto& e : R.entries) e = (rng.next() & 1) ? std::int8_t{1} : std::int8_t{-1};
    return R;
}

ScaledVector apply_projection(const ProjectionMatrix& R, const LatticePoint& x) {
    if (static_cast<int>(x.numerators.size()) != R.d)
        throw DimensionMismatch("point dimension does not match projection");
    ScaledVector y;
    y.denominator = x.denominator;
    y.irrational_k = static_cast<unsigned>(R.k);
    y.numerators.resize(R.k);
    for (int i = 0; i < R.k; ++i) {
        Int s = 0;
        for (int j = 0; j < R.d; ++j) {
            if (R.at(i, j) > 0) s += x.numerators[j];
            else s -= x.numerators[j];
        }
        y.numerators[i] = s;
    }
    return y;
}

JlCertificate certify_jl(const ProjectionMatrix& R, const LatticePointSet& S,
                         const Rat& epsilon) {
    std::size_t n = S.size();
    std::vector<ScaledVector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = apply_projection(R, S.points[i]);

    JlCertificate cert;
    cert.epsilon = epsilon;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat dx = exact_sq_distance(S.points[i], S.points[j]);
            Rat dy = exact_sq_distance(images[i], images[j]);
            Rat r2 = dy / dx;
            if (first || r2 < cert.min_sq_ratio) {
                cert.min_sq_ratio = r2;
                cert.worst_low_pair = {i, j};
            }
            if (first || r2 > cert.max_sq_ratio) {
                cert.max_sq_ratio = r2;
                cert.worst_high_pair = {i, j};
            }
            first = false;
        }
    Rat lo = 1 - epsilon, hi = 1 + epsilon;
    cert.passed = (cert.min_sq_ratio >= lo * lo) && (cert.max_sq_ratio <= hi * hi);
    cert.worst_low_ratio = std::sqrt(to_double(cert.min_sq_ratio));
    cert.worst_high_ratio = std::sqrt(to_double(cert.max_sq_ratio));
    return cert;
}

std::pair<ProjectionMatrix, JlCertificate> find_good_projection(
    const LatticePointSet& S, int k, const Rat& epsilon, int max_attempts,
    std::uint64_t seed) {
    if (max_attempts < 1) throw Error("max_attempts must be >= 1");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        ProjectionMatrix R = sample_projection(S.params.ambient_dim, k, seed + attempt);
        JlCertificate cert = certify_jl(R, S, epsilon);
        if (cert.passed) {
            R.attempts_used = attempt + 1;
            return {std::move(R), std::move(cert)};
        }
    }
    throw ProjectionNotFound("no projection certified after " +
                             std::to_string(max_attempts) +
                             " attempts (k likely too small)");
}

}  // namespace latjl
