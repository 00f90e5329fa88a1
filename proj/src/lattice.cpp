#include "latjl/lattice.hpp"

#include <cmath>

namespace latjl {

bool is_lattice_member(const std::vector<double>& v, const Int& lambda0, double tol) {
    double l0 = lambda0.convert_to<double>();
    for (double x : v) {
        double s = x * l0;
        if (std::abs(s - std::round(s)) > tol) return false;
    }
    return true;
}

bool is_lattice_member_exact(const ScaledVector& v, const Int& lambda0) {
    // numerators/(den*sqrt(k)) in (1/(lambda0*sqrt(k)))Z  <=>  den | lambda0*num
    for (const Int& n : v.numerators)
        if ((lambda0 * n) % v.denominator != 0) return false;
    return true;
}

std::vector<Int> nearest_lattice_point(const std::vector<double>& v, const Int& lambda0) {
    double l0 = lambda0.convert_to<double>();
    std::vector<Int> z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        // std::round rounds halfway cases away from zero
        z[i] = Int(static_cast<long long>(std::llround(v[i] * l0)));
    }
    return z;
}

double rounding_distance(const std::vector<double>& v, const Int& lambda0) {
    double l0 = lambda0.convert_to<double>();
    double s = 0;
    for (double x : v) {
        double e = x - std::round(x * l0) / l0;
        s += e * e;
    }
    return std::sqrt(s);
}

std::vector<std::vector<Rat>> exact_pairwise_sq_distances(const LatticePointSet& S) {
    std::size_t n = S.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat d = exact_sq_distance(S.points[i], S.points[j]);
            if (d == 0)
                throw DuplicatePoint("coincident points " + std::to_string(i) + "," +
                                     std::to_string(j));
            m[i][j] = d;
            m[j][i] = d;
        }
    return m;
}

}  // namespace latjl
