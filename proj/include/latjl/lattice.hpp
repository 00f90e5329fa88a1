#pragma once

#include "latjl/numeric.hpp"

#include <vector>

namespace latjl {

// ---------------------------------------------------------------------------
// lattice_core: exact scaled-lattice points, rounding, distances.
// ---------------------------------------------------------------------------

struct LatticeParams {
    Int lambda0;      // lattice denominator
    int ambient_dim;  // d
    Int bound;        // Euclidean norm bound N0
    Rat epsilon;      // distortion budget, in (0, 1/(lambda0+1))

    LatticeParams(Int lambda0_, int dim_, Int bound_, Rat epsilon_)
        : lambda0(std::move(lambda0_)), ambient_dim(dim_),
          bound(std::move(bound_)), epsilon(std::move(epsilon_)) {
        if (lambda0 < 1) throw Error("lambda0 must be >= 1");
        if (ambient_dim < 1) throw Error("ambient_dim must be >= 1");
        if (bound < 1) throw Error("bound must be >= 1");
        if (!(epsilon > 0 && epsilon < Rat(1, lambda0 + 1)))
            throw EpsilonOutOfRange("epsilon must lie strictly in (0, 1/(lambda0+1))");
    }
};

/// numerators / denominator, componentwise; all arithmetic exact.
struct LatticePoint {
    std::vector<Int> numerators;
    Int denominator;

    Rat sq_norm() const {
        Int s = 0;
        for (const Int& v : numerators) s += v * v;
        return Rat(s, denominator * denominator);
    }
};

inline Rat exact_sq_distance(const LatticePoint& a, const LatticePoint& b) {
    if (a.numerators.size() != b.numerators.size() || a.denominator != b.denominator)
        throw DimensionMismatch("points not on the same lattice");
    Int s = 0;
    for (std::size_t i = 0; i < a.numerators.size(); ++i) {
        Int d = a.numerators[i] - b.numerators[i];
        s += d * d;
    }
    return Rat(s, a.denominator * a.denominator);
}

struct LatticePointSet {
    std::vector<LatticePoint> points;
    LatticeParams params;

    LatticePointSet(std::vector<LatticePoint> pts, LatticeParams p)
        : points(std::move(pts)), params(std::move(p)) {
        if (points.size() < 2) throw Error("point set needs at least 2 points");
        Int b2 = params.bound * params.bound;
        for (const auto& pt : points) {
            if (static_cast<int>(pt.numerators.size()) != params.ambient_dim)
                throw DimensionMismatch("point dimension mismatch");
            if (pt.denominator != params.lambda0)
                throw Error("point denominator must equal lambda0");
            if (pt.sq_norm() > Rat(b2)) throw Error("point exceeds norm bound");
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i].numerators == points[j].numerators)
                    throw DuplicatePoint("duplicate point at indices " +
                                         std::to_string(i) + "," + std::to_string(j));
    }

    std::size_t size() const { return points.size(); }
};

/// Integer vector with denominator and an optional symbolic 1/sqrt(k) factor.
/// Represents numerators / (denominator * sqrt(irrational_k)); irrational_k == 0
/// means no irrational factor. Squared norms stay exactly rational either way.
struct ScaledVector {
    std::vector<Int> numerators;
    Int denominator;
    unsigned irrational_k = 0;

    Rat sq_norm() const {
        Int s = 0;
        for (const Int& v : numerators) s += v * v;
        Int den = denominator * denominator;
        if (irrational_k) den *= irrational_k;
        return Rat(s, den);
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out(numerators.size());
        double den = denominator.convert_to<double>();
        if (irrational_k) den *= std::sqrt(static_cast<double>(irrational_k));
        for (std::size_t i = 0; i < numerators.size(); ++i)
            out[i] = numerators[i].convert_to<double>() / den;
        return out;
    }
};

inline Rat exact_sq_distance(const ScaledVector& a, const ScaledVector& b) {
    if (a.numerators.size() != b.numerators.size() || a.denominator != b.denominator ||
        a.irrational_k != b.irrational_k)
        throw DimensionMismatch("scaled vectors not on the same lattice");
    Int s = 0;
    for (std::size_t i = 0; i < a.numerators.size(); ++i) {
        Int d = a.numerators[i] - b.numerators[i];
        s += d * d;
    }
    Int den = a.denominator * a.denominator;
    if (a.irrational_k) den *= a.irrational_k;
    return Rat(s, den);
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// True iff every coordinate of lambda0*v is within tol of an integer.
bool is_lattice_member(const std::vector<double>& v, const Int& lambda0, double tol);

/// Exact membership of a ScaledVector in (1/(lambda0*sqrt(k)))Z^k, k from the
/// vector's own symbolic scale (or (1/lambda0)Z^k when the scale is one).
bool is_lattice_member_exact(const ScaledVector& v, const Int& lambda0);

/// Componentwise round of lambda0*v, half away from zero.
std::vector<Int> nearest_lattice_point(const std::vector<double>& v, const Int& lambda0);

/// ||v - z/lambda0|| for z = nearest_lattice_point(v).
double rounding_distance(const std::vector<double>& v, const Int& lambda0);

/// Entry (i,j) = ||x_i - x_j||^2, exact.
std::vector<std::vector<Rat>> exact_pairwise_sq_distances(const LatticePointSet& S);

}  // namespace latjl
