#pragma once

#include "latjl/diophantine.hpp"
#include "latjl/projection.hpp"
#include "latjl/rotation.hpp"

#include <optional>

namespace latjl {

// ---------------------------------------------------------------------------
// embedder: the full pipeline (project, center, scale, rotate, round) with
// exact certification of the final distortion bound 1 +- (eps + eps/(lambda*lambda0)).
// ---------------------------------------------------------------------------

struct EmbedConfig {
    std::optional<int> k;               // even; default from choose_k
    std::optional<double> c_override;   // alternative choose_k constant
    std::uint64_t seed = 0;
    int max_attempts = 64;              // projection resampling
    Int max_lambda = Int(1000000);      // lambda search cap
    RotationSearchBudget rotation_budget;
    double meb_tol = 1e-6;
};

struct EmbeddingResult {
    LatticePointSet input;
    Int lambda;
    ProjectionMatrix projection;
    JlCertificate jl_certificate;
    ScaledVector center;                // snap point c*, on (1/(lambda0*sqrt(k)))Z^k
    RotationWitness rotation_witness;
    std::vector<std::vector<Int>> outputs;  // z_i: the map lambda*x_i -> z_i/lambda0
    int k = 0;
};

struct DistortionReport {
    Rat lower_bound;   // 1 - eps - eps/(lambda*lambda0)
    Rat upper_bound;   // 1 + eps + eps/(lambda*lambda0)
    double min_ratio = 0;
    double max_ratio = 0;
    Rat min_sq_ratio;  // exact squared extremes behind the verdict
    Rat max_sq_ratio;
    std::pair<std::size_t, std::size_t> worst_low_pair{0, 0};
    std::pair<std::size_t, std::size_t> worst_high_pair{0, 0};
    bool passed = false;
    double margin = 0;  // min slack against the bounds
};

struct CertificationFailed : Error {
    DistortionReport report;
    explicit CertificationFailed(DistortionReport r)
        : Error("distortion certification failed"), report(std::move(r)) {}
};

/// Projection + centering, shared across lambda candidates (both are
/// lambda-independent).
struct PipelineContext {
    LatticePointSet input;
    int k;
    ProjectionMatrix projection;
    JlCertificate jl_certificate;
    ScaledVector center;
    std::vector<ScaledVector> centered;  // y_i - c*, exact
    double n_flat;                       // norm bound of the centered images
};

PipelineContext setup_pipeline(const LatticePointSet& S, const EmbedConfig& config);

/// Stages 3-6 for one lambda on a prepared context.
EmbeddingResult embed_with_context(const PipelineContext& ctx, const Int& lambda,
                                   const EmbedConfig& config);

EmbeddingResult embed(const LatticePointSet& S, const Int& lambda,
                      const EmbedConfig& config);

/// Recomputes every pairwise ratio from the stored inputs and outputs only,
/// exact squared-rational comparison against the bounds.
DistortionReport certify(const EmbeddingResult& result);

/// The proof's lower bound on ||z_i - z_j||/(lambda*lambda0):
/// 1/lambda0 - eps*(1 + 1/lambda0), strictly positive when eps < 1/(lambda0+1).
Rat injectivity_floor(const Int& lambda0, const Rat& epsilon);

struct NaiveBaselineResult {
    DistortionReport report;
    std::vector<std::vector<Int>> outputs;
    double max_rounding_distance = 0;  // per-point, a priori <= sqrt(k)/(2*lambda0)
};

/// Rounds lambda*Phi(x_i) directly to (1/lambda0)Z^k, no centering or rotation.
NaiveBaselineResult naive_baseline(const LatticePointSet& S, const ProjectionMatrix& R,
                                   const Int& lambda);

/// Smallest certifying lambda: candidates are multiples of the Diophantine
/// witness n1 for t = 1/sqrt(k) (tightened target), then consecutive integers.
std::pair<Int, EmbeddingResult> search_lambda(const LatticePointSet& S,
                                              const EmbedConfig& config);

}  // namespace latjl
