#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latjl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Error types
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicatePoint : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EpsilonOutOfRange : Error { using Error::Error; };
struct ProjectionNotFound : Error { using Error::Error; };
struct MembershipViolation : Error { using Error::Error; };
struct InjectivityViolation : Error { using Error::Error; };
struct DuplicateOutput : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct InfeasibleInstance : Error { using Error::Error; };
struct LambdaSearchExhausted : Error { using Error::Error; };

struct RotationNotFound : Error {
    double best_achieved;
    explicit RotationNotFound(double achieved)
        : Error("no rotation found meeting target; best achieved " +
                std::to_string(achieved)),
          best_achieved(achieved) {}
};

// ---------------------------------------------------------------------------
// Exact helpers
// ---------------------------------------------------------------------------

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw Error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (root) *root = r;
    return r * r == n;
}

/// Rational bracket [lo, hi] with lo <= sqrt(n) <= hi and hi - lo = 2^-bits.
inline std::pair<Rat, Rat> sqrt_bracket(const Int& n, unsigned bits) {
    Int scale = Int(1) << bits;
    Int s = isqrt_floor(n * scale * scale);
    return {Rat(s, scale), Rat(s + 1, scale)};
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline long double to_long_double(const Rat& r) { return r.convert_to<long double>(); }

/// Exact rational from a finite double (binary expansion, no decimal guessing).
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw Error("non-finite value");
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    Int num = 0;
    for (int i = 0; i < 64 && m != 0.0; ++i) {
        m *= 2;
        double d = std::trunc(m);
        num = num * 2 + Int(static_cast<long long>(d));
        m -= d;
        --exp;
    }
    Rat r(num);
    if (exp >= 0) r *= Rat(Int(1) << exp);
    else r /= Rat(Int(1) << (-exp));
    return r;
}

/// Parses "a/b" or a plain decimal string ("0.2" -> 2/10) as an exact rational.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { throw SchemaError("cannot parse rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        try {
            Int n(num), d(den);
            if (d == 0) bad();
            return Rat(n, d);
        } catch (const std::exception&) { bad(); }
    }
    // decimal form [-]digits[.digits]
    std::string t = s;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') { neg = (t[0] == '-'); t = t.substr(1); }
    auto dot = t.find('.');
    std::string intpart = (dot == std::string::npos) ? t : t.substr(0, dot);
    std::string frac = (dot == std::string::npos) ? "" : t.substr(dot + 1);
    if (intpart.empty() && frac.empty()) bad();
    for (char c : intpart + frac) if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    Int num = 0;
    for (char c : intpart + frac) num = num * 10 + (c - '0');
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rat r(num, den);
    return neg ? -r : r;
}

inline std::string rat_to_string(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

// ---------------------------------------------------------------------------
// Portable seeded PRNG: splitmix64, the entire artifact's randomness source.
// Fully specified by the code below, so identical seeds give identical
// streams on every platform.
// ---------------------------------------------------------------------------

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

}  // namespace latjl
