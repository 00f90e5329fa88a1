#pragma once

#include "latjl/lattice.hpp"

#include <vector>

namespace latjl {

// ---------------------------------------------------------------------------
// geometry: minimal enclosing ball, lattice-snapped centering, block rotations.
// ---------------------------------------------------------------------------

struct EnclosingBall {
    std::vector<double> center;
    double radius = 0;
    std::vector<std::size_t> support_indices;
    double tolerance = 0;
};

/// Smallest ball containing all points. Exact combinatorial (move-to-front)
/// solver for n <= 50; iterative core-set approximation beyond, with radius
/// within a (1+tol) factor of optimal. Deterministic given input order.
EnclosingBall minimal_enclosing_ball(const std::vector<std::vector<double>>& points,
                                     double tol = 1e-6);

/// Nearest point of (1/(lambda0*sqrt(k)))Z^k to the ball center. Translating
/// by its negation is an isometry that keeps exact lattice membership; the
/// post-centering norm bound is radius + 1/(2*lambda0).
ScaledVector snap_center_to_lattice(const EnclosingBall& ball, const Int& lambda0,
                                    int k);

/// k/2 planar rotation angles acting on consecutive coordinate pairs; an
/// element of SO(k) by construction (never materialized as a dense matrix).
struct BlockRotation {
    std::vector<double> angles;  // radians, in [0, 2*pi)
    int k = 0;

    static BlockRotation identity(int k) {
        return BlockRotation{std::vector<double>(k / 2, 0.0), k};
    }
};

std::vector<double> apply_block_rotation(const BlockRotation& rho,
                                         const std::vector<double>& v);

/// Extended-precision variant used by independent witness verification.
std::vector<long double> apply_block_rotation_ext(const BlockRotation& rho,
                                                  const std::vector<long double>& v);

}  // namespace latjl
