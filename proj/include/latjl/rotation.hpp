#pragma once

#include "latjl/geometry.hpp"

#include <string>
#include <vector>

namespace latjl {

// ---------------------------------------------------------------------------
// rotation_search: per-lambda verified block-rotation search bringing a point
// set within a target distance of (1/lambda0)Z^k.
// ---------------------------------------------------------------------------

enum class RotationStrategy { identity, per_block_grid, gaussian_integer_hint };

std::string to_string(RotationStrategy s);

struct RotationWitness {
    BlockRotation rotation;
    Int lambda;
    double target = 0;          // delta
    double achieved = 0;        // max point distance to the lattice after rotation
    RotationStrategy strategy = RotationStrategy::identity;
    double grid_resolution = 0; // sigma of the coarsest block grid used (0 = none)
};

struct RotationSearchBudget {
    long grid_points_per_block = 500000;
    bool gaussian_hints = false;
};

/// Distance of every point to its nearest (1/lambda0)Z^k point, plus the max.
std::pair<double, std::vector<double>> lattice_distance_profile(
    const std::vector<std::vector<double>>& points, const Int& lambda0);

/// Strategy cascade: identity if the unrotated profile already meets the
/// target; otherwise an independent angle grid per coordinate-pair block with
/// per-block target delta/sqrt(k/2) and step sigma = target_b/(2*r_max).
/// The returned witness is always re-verified by a fresh profile evaluation.
/// Throws RotationNotFound (carrying the best achieved profile) on failure.
RotationWitness search_rotation(const std::vector<std::vector<double>>& points,
                                const Int& lambda0, double delta,
                                const RotationSearchBudget& budget = {});

/// Independent extended-precision recheck: achieved <= target with margin
/// >= 1e-9; never trusts the search's own bookkeeping.
bool verify_witness(const RotationWitness& w,
                    const std::vector<std::vector<double>>& points,
                    const Int& lambda0);

}  // namespace latjl
