#pragma once

#include "latjl/io.hpp"

namespace latjl {

/// n distinct uniform random points of (1/lambda0)Z^dim with exact Euclidean
/// norm <= bound; deterministic per seed. Throws InfeasibleInstance when n
/// exceeds the lattice-ball cardinality (or rejection stalls).
std::vector<std::vector<Int>> generate_points(int n, int dim, const Int& lambda0,
                                              const Int& bound, std::uint64_t seed);

Json generated_point_set_json(int n, int dim, const Int& lambda0, const Int& bound,
                              std::uint64_t seed);

}  // namespace latjl
