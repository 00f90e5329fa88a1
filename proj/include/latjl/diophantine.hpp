#pragma once

#include "latjl/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latjl {

// ---------------------------------------------------------------------------
// diophantine: continued fractions of quadratic irrationals and the smallest
// integer n1 with |n1*t - p| below a target, all in exact arithmetic.
// ---------------------------------------------------------------------------

/// Exact description of the approximated value t.
struct ValueDescriptor {
    enum class Kind { rational, inv_sqrt, sqrt } kind;
    Rat rational_value;  // used when kind == rational
    unsigned k = 0;      // used for inv_sqrt / sqrt; must be a non-square there

    static ValueDescriptor make_rational(Rat q) {
        return {Kind::rational, std::move(q), 0};
    }
    static ValueDescriptor inv_sqrt(unsigned k) { return {Kind::inv_sqrt, Rat(0), k}; }
    static ValueDescriptor sqrt(unsigned k) { return {Kind::sqrt, Rat(0), k}; }

    bool is_rational() const { return kind == Kind::rational; }
    /// High-precision rational bracket [lo, hi] containing t.
    std::pair<Rat, Rat> bracket(unsigned bits = 128) const;
    double approx() const;
};

struct ContinuedFraction {
    ValueDescriptor value;
    std::vector<Int> partial_quotients;
    std::vector<std::pair<Int, Int>> convergents;  // (p, q)
    bool terminated = false;       // rational t: expansion ended
    std::optional<int> period_start, period_length;  // quadratic irrationals
};

struct ScalingWitness {
    Int n1;
    Int p;
    ValueDescriptor t;
    Rat bound;       // target epsilon / N
    double achieved; // |n1*t - p|, high-precision evaluation
};

/// Partial quotients and convergents, exact integer algebra throughout.
ContinuedFraction continued_fraction(const ValueDescriptor& t, int depth);

/// |n*t - p| < bound, exact comparison (no floating point).
bool exact_abs_below(const ValueDescriptor& t, const Int& n, const Int& p,
                     const Rat& bound);

/// Certain-sign interval re-verification of |n*t - p| < bound at the given
/// number of fractional bits (default 128). True only if the whole interval
/// sits strictly below the bound.
bool verify_witness_interval(const ScalingWitness& w, unsigned bits = 128);

/// Smallest n1 with |n1*t - p| < epsilon/N. For rational t = a/b returns (b, a).
ScalingWitness find_scaling(const ValueDescriptor& t, const Rat& epsilon, const Rat& N);

/// Max over points of the Euclidean distance from n1*point to Z^k. Every point
/// must be an exact member of t*Z^k.
double scaling_lattice_distance(const std::vector<ScaledVector>& S,
                                const ValueDescriptor& t, const Int& n1);

}  // namespace latjl
