#pragma once

#include "latjl/lattice.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace latjl {

// ---------------------------------------------------------------------------
// jl_projection: seeded sign matrices, exact application onto the
// (1/(lambda0*sqrt(k))) lattice, and exact distortion certification.
// ---------------------------------------------------------------------------

/// k x d sign matrix, row-major, entries in {-1,+1}.
struct ProjectionMatrix {
    std::vector<std::int8_t> entries;
    int k = 0;
    int d = 0;
    std::uint64_t seed = 0;
    int attempts_used = 1;

    std::int8_t at(int row, int col) const { return entries[static_cast<std::size_t>(row) * d + col]; }
};

struct JlCertificate {
    Rat epsilon;
    double worst_low_ratio = 0;
    double worst_high_ratio = 0;
    std::pair<std::size_t, std::size_t> worst_low_pair{0, 0};
    std::pair<std::size_t, std::size_t> worst_high_pair{0, 0};
    bool passed = false;
    // exact squared extremes, kept for downstream exact comparisons
    Rat min_sq_ratio;
    Rat max_sq_ratio;
};

/// Smallest even k >= 4 ln(n)/(eps^2/2 - eps^3/3), or c_override * ln(n)/eps^2.
int choose_k(int n, const Rat& epsilon, std::optional<double> c_override = std::nullopt);

/// Entries i.i.d. uniform on {-1,+1} from splitmix64(seed); bit-reproducible.
ProjectionMatrix sample_projection(int d, int k, std::uint64_t seed);

/// Phi(x) = (1/sqrt(k)) R x, kept exact via the symbolic scale.
ScaledVector apply_projection(const ProjectionMatrix& R, const LatticePoint& x);

JlCertificate certify_jl(const ProjectionMatrix& R, const LatticePointSet& S,
                         const Rat& epsilon);

/// Resamples with seeds seed, seed+1, ... until certification passes.
std::pair<ProjectionMatrix, JlCertificate> find_good_projection(
    const LatticePointSet& S, int k, const Rat& epsilon, int max_attempts,
    std::uint64_t seed);

}  // namespace latjl
