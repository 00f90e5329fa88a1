#include "latjl/diophantine.hpp"

#include <cmath>
#include <map>

namespace latjl {

std::pair<Rat, Rat> ValueDescriptor::bracket(unsigned bits) const {
    switch (kind) {
        case Kind::rational:
            return {rational_value, rational_value};
        case Kind::sqrt:
            return sqrt_bracket(Int(k), bits);
        case Kind::inv_sqrt: {
            auto [lo, hi] = sqrt_bracket(Int(k), bits);
            // 1/sqrt(k) = sqrt(k)/k
            return {lo / k, hi / k};
        }
    }
    throw Error("bad descriptor");
}

double ValueDescriptor::approx() const {
    switch (kind) {
        case Kind::rational: return to_double(rational_value);
        case Kind::sqrt: return std::sqrt(static_cast<double>(k));
        case Kind::inv_sqrt: return 1.0 / std::sqrt(static_cast<double>(k));
    }
    throw Error("bad descriptor");
}

namespace {

void check_surd(const ValueDescriptor& t) {
    if (t.is_rational()) return;
    if (t.k == 0 || is_perfect_square(Int(t.k)))
        throw Error("surd descriptor requires a non-square k");
}

void push_convergent(ContinuedFraction& cf, const Int& a) {
    cf.partial_quotients.push_back(a);
    std::size_t m = cf.convergents.size();
    Int p1 = (m >= 1) ? cf.convergents[m - 1].first : Int(1);
    Int p2 = (m >= 2) ? cf.convergents[m - 2].first : (m == 1 ? Int(1) : Int(0));
    Int q1 = (m >= 1) ? cf.convergents[m - 1].second : Int(0);
    Int q2 = (m >= 2) ? cf.convergents[m - 2].second : (m == 1 ? Int(0) : Int(1));
    cf.convergents.emplace_back(a * p1 + p2, a * q1 + q2);
}

/// Exact truth of X < Y*sqrt(k) for rationals X, Y and non-square k.
bool lt_times_sqrt(const Rat& X, const Rat& Y, unsigned k) {
    if (Y >= 0) {
        if (X < 0) return true;
        if (X == 0) return Y > 0;
        if (Y == 0) return false;
        return X * X < Y * Y * k;
    }
    // Y < 0: RHS negative
    if (X >= 0) return false;
    return X * X > Y * Y * k;
}

}  // namespace

ContinuedFraction continued_fraction(const ValueDescriptor& t, int depth) {
    if (depth < 1) throw Error("depth must be >= 1");
    check_surd(t);
    ContinuedFraction cf;
    cf.value = t;

    if (t.is_rational()) {
        Int a = boost::multiprecision::numerator(t.rational_value);
        Int b = boost::multiprecision::denominator(t.rational_value);
        if (a < 0) throw Error("continued_fraction expects t >= 0");
        while (b != 0 && static_cast<int>(cf.partial_quotients.size()) < depth) {
            Int q = a / b;  // a, b >= 0
            push_convergent(cf, q);
            Int r = a % b;
            a = b;
            b = r;
        }
        cf.terminated = (b == 0);
        return cf;
    }

    // t = (P + sqrt(D)) / Q with Q | (D - P^2)
    Int D(t.k);
    Int P = 0;
    Int Q = (t.kind == ValueDescriptor::Kind::inv_sqrt) ? Int(t.k) : Int(1);
    Int s = isqrt_floor(D);

    std::map<std::pair<Int, Int>, int> seen;
    for (int m = 0; m < depth; ++m) {
        if (m > 0) {
            auto key = std::make_pair(P, Q);
            auto it = seen.find(key);
            if (it != seen.end() && !cf.period_start) {
                cf.period_start = it->second;
                cf.period_length = m - it->second;
            }
            seen.emplace(key, m);
        }
        Int a = (P + s) / Q;
        push_convergent(cf, a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    return cf;
}

bool exact_abs_below(const ValueDescriptor& t, const Int& n, const Int& p,
                     const Rat& bound) {
    if (bound <= 0) return false;
    switch (t.kind) {
        case ValueDescriptor::Kind::rational: {
            Rat v = Rat(n) * t.rational_value - p;
            if (v < 0) v = -v;
            return v < bound;
        }
        case ValueDescriptor::Kind::inv_sqrt: {
            // |n/sqrt(k) - p| < b  <=>  n^2 + p^2 k - b^2 k < 2np*sqrt(k)
            Rat A = Rat(n * n) + Rat(p * p) * t.k;
            Rat B = Rat(2 * n * p);
            Rat C = bound * bound * t.k;
            return lt_times_sqrt(A - C, B, t.k);
        }
        case ValueDescriptor::Kind::sqrt: {
            // |n*sqrt(k) - p| < b  <=>  n^2 k + p^2 - b^2 < 2np*sqrt(k)
            Rat A = Rat(n * n) * t.k + Rat(p * p);
            Rat B = Rat(2 * n * p);
            Rat C = bound * bound;
            return lt_times_sqrt(A - C, B, t.k);
        }
    }
    throw Error("bad descriptor");
}

bool verify_witness_interval(const ScalingWitness& w, unsigned bits) {
    auto [lo, hi] = w.t.bracket(bits);
    Rat vlo = Rat(w.n1) * lo - w.p;
    Rat vhi = Rat(w.n1) * hi - w.p;
    if (vlo > vhi) std::swap(vlo, vhi);
    Rat abs_hi = (vhi > -vlo) ? vhi : -vlo;
    // interval of |n1*t - p| must sit strictly below the bound
    return abs_hi < w.bound;
}

ScalingWitness find_scaling(const ValueDescriptor& t, const Rat& epsilon, const Rat& N) {
    if (N <= 0 || epsilon <= 0) throw Error("find_scaling needs epsilon, N > 0");
    Rat bound = epsilon / N;
    if (bound >= 1) throw Error("find_scaling needs epsilon/N in (0, 1)");
    check_surd(t);

    if (t.is_rational()) {
        if (t.rational_value <= 0) throw Error("rational t must be positive");
        ScalingWitness w;
        w.t = t;
        w.bound = bound;
        w.n1 = boost::multiprecision::denominator(t.rational_value);
        w.p = boost::multiprecision::numerator(t.rational_value);
        w.achieved = 0.0;
        return w;
    }

    // The smallest n with ||n*t|| below any threshold is a convergent
    // denominator (best approximations of the second kind), so scanning
    // convergents in order yields the true minimum.
    int depth = 64;
    for (int rounds = 0; rounds < 8; ++rounds, depth *= 2) {
        ContinuedFraction cf = continued_fraction(t, depth);
        for (const auto& [p, q] : cf.convergents) {
            if (q < 1) continue;
            if (exact_abs_below(t, q, p, bound)) {
                ScalingWitness w;
                w.t = t;
                w.bound = bound;
                w.n1 = q;
                w.p = p;
                auto [lo, hi] = t.bracket(192);
                Rat mid = Rat(q) * (lo + hi) / 2 - p;
                if (mid < 0) mid = -mid;
                w.achieved = to_double(mid);
                if (!verify_witness_interval(w)) continue;
                return w;
            }
        }
    }
    throw Error("find_scaling: no witness within convergent depth budget");
}

double scaling_lattice_distance(const std::vector<ScaledVector>& S,
                                const ValueDescriptor& t, const Int& n1) {
    check_surd(t);
    long double td = 0;
    switch (t.kind) {
        case ValueDescriptor::Kind::rational:
            td = to_long_double(t.rational_value);
            break;
        case ValueDescriptor::Kind::sqrt:
            td = sqrtl(static_cast<long double>(t.k));
            break;
        case ValueDescriptor::Kind::inv_sqrt:
            td = 1.0L / sqrtl(static_cast<long double>(t.k));
            break;
    }
    long double n1d = n1.convert_to<long double>();
    long double worst = 0;
    for (const auto& v : S) {
        // exact membership of v in t*Z^k
        for (const Int& num : v.numerators) {
            bool ok = false;
            if (t.kind == ValueDescriptor::Kind::inv_sqrt) {
                ok = (v.irrational_k == t.k) && (num % v.denominator == 0);
            } else if (t.kind == ValueDescriptor::Kind::sqrt) {
                // num/(den*sqrt(j)) in sqrt(k)Z with j == k: num/(den*k) integer
                ok = (v.irrational_k == t.k) && (num % (v.denominator * t.k) == 0);
            } else {
                Rat q = Rat(num, v.denominator) / t.rational_value;
                ok = (v.irrational_k == 0) &&
                     boost::multiprecision::denominator(q) == 1;
            }
            if (!ok) throw MembershipViolation("point not an exact member of t*Z^k");
        }
        long double s = 0;
        for (const Int& num : v.numerators) {
            long double coord;
            if (t.kind == ValueDescriptor::Kind::inv_sqrt) {
                // value = (num/den) * t with num/den integer
                coord = (num / v.denominator).convert_to<long double>() * td;
            } else if (t.kind == ValueDescriptor::Kind::sqrt) {
                coord = (num / (v.denominator * t.k)).convert_to<long double>() * td;
            } else {
                coord = to_long_double(Rat(num, v.denominator));
            }
            long double x = coord * n1d;
            long double e = x - roundl(x);
            s += e * e;
        }
        worst = std::max(worst, sqrtl(s));
    }
    return static_cast<double>(worst);
}

}  // namespace latjl
