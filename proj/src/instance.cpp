#include "latjl/instance.hpp"

#include <set>

namespace latjl {

namespace {
/// Lattice-ball cardinality by recursive enumeration; gives up (returns -1)
/// past the cap so huge spaces skip the exact feasibility check.
long long count_ball_points(int dim, const Int& coord_max, const Int& r2,
                            long long cap) {
    if (dim == 0) return r2 >= 0 ? 1 : 0;
    long long total = 0;
    for (Int c = -coord_max; c <= coord_max; ++c) {
        Int rem = r2 - c * c;
        if (rem < 0) continue;
        long long sub = count_ball_points(dim - 1, coord_max, rem, cap - total);
        if (sub < 0) return -1;
        total += sub;
        if (total > cap) return -1;
    }
    return total;
}
}  // namespace

std::vector<std::vector<Int>> generate_points(int n, int dim, const Int& lambda0,
                                              const Int& bound, std::uint64_t seed) {
    if (n < 2 || dim < 1 || lambda0 < 1 || bound < 1)
        throw Error("generate_points: need n >= 2 and positive dim, lambda0, bound");
    Int coord_max = lambda0 * bound;
    Int r2 = coord_max * coord_max;

    double log_box = dim * std::log(2 * coord_max.convert_to<double>() + 1);
    if (log_box < std::log(2e6)) {
        long long card = count_ball_points(dim, coord_max, r2, 2000000);
        if (card >= 0 && card < n)
            throw InfeasibleInstance("requested " + std::to_string(n) +
                                     " points but the lattice ball holds only " +
                                     std::to_string(card));
    }

    SplitMix64 rng(seed);
    // sample from a box close to the inscribed cube; a box with the full
    // coordinate range has vanishing acceptance in high dimension
    Int half = coord_max / isqrt_floor(Int(dim));
    if (half < 1) half = 1;
    if (half > coord_max) half = coord_max;
    long long lo = -half.convert_to<long long>();
    long long hi = half.convert_to<long long>();
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<Int>> out;
    long long stalls = 0;
    while (static_cast<int>(out.size()) < n) {
        std::vector<long long> cand(dim);
        for (int j = 0; j < dim; ++j) cand[j] = rng.next_in(lo, hi);
        Int s = 0;
        for (long long c : cand) s += Int(c) * c;
        if (s > r2 || !seen.insert(cand).second) {
            if (++stalls > 1000000)
                throw InfeasibleInstance("rejection sampling stalled; instance too tight");
            continue;
        }
        std::vector<Int> p(dim);
        for (int j = 0; j < dim; ++j) p[j] = Int(cand[j]);
        out.push_back(std::move(p));
    }
    return out;
}

Json generated_point_set_json(int n, int dim, const Int& lambda0, const Int& bound,
                              std::uint64_t seed) {
    auto pts = generate_points(n, dim, lambda0, bound, seed);
    Json j;
    j["lambda0"] = int_to_json(lambda0);
    j["dim"] = dim;
    j["bound"] = int_to_json(bound);
    Json rows = Json::array();
    for (const auto& p : pts) {
        Json row = Json::array();
        for (const Int& v : p) row.push_back(int_to_json(v));
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    return j;
}

}  // namespace latjl
