#include "latjl/embed.hpp"

#include <algorithm>
#include <cmath>

namespace latjl {

namespace {

DistortionReport certify_outputs(const LatticePointSet& S,
                                 const std::vector<std::vector<Int>>& outputs,
                                 const Int& lambda, bool throw_on_duplicate) {
    const Int& l0 = S.params.lambda0;
    const Rat& eps = S.params.epsilon;
    std::size_t n = S.size();
    if (outputs.size() != n) throw Error("output count mismatch");

    DistortionReport rep;
    Rat extra = eps / Rat(lambda * l0);
    rep.lower_bound = 1 - eps - extra;
    rep.upper_bound = 1 + eps + extra;

    Rat l0sq(l0 * l0);
    Rat lamsq(lambda * lambda);
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Int dz = 0;
            for (std::size_t c = 0; c < outputs[i].size(); ++c) {
                Int d = outputs[i][c] - outputs[j][c];
                dz += d * d;
            }
            if (dz == 0 && throw_on_duplicate)
                throw DuplicateOutput("identical outputs at indices " +
                                      std::to_string(i) + "," + std::to_string(j));
            Rat dz2 = Rat(dz) / l0sq;
            Rat dx2 = lamsq * exact_sq_distance(S.points[i], S.points[j]);
            Rat r2 = dz2 / dx2;
            if (first || r2 < rep.min_sq_ratio) {
                rep.min_sq_ratio = r2;
                rep.worst_low_pair = {i, j};
            }
            if (first || r2 > rep.max_sq_ratio) {
                rep.max_sq_ratio = r2;
                rep.worst_high_pair = {i, j};
            }
            first = false;
        }

    rep.passed = (rep.min_sq_ratio >= rep.lower_bound * rep.lower_bound) &&
                 (rep.max_sq_ratio <= rep.upper_bound * rep.upper_bound);
    rep.min_ratio = std::sqrt(to_double(rep.min_sq_ratio));
    rep.max_ratio = std::sqrt(to_double(rep.max_sq_ratio));
    rep.margin = std::min(rep.min_ratio - to_double(rep.lower_bound),
                          to_double(rep.upper_bound) - rep.max_ratio);
    return rep;
}

int resolve_k(const LatticePointSet& S, const EmbedConfig& config) {
    if (config.k) {
        if (*config.k < 2 || *config.k % 2 != 0)
            throw Error("k must be even and >= 2");
        return *config.k;
    }
    return choose_k(static_cast<int>(S.size()), S.params.epsilon, config.c_override);
}

double rotation_delta(const LatticePointSet& S) {
    Rat d = S.params.epsilon / S.params.lambda0;
    Rat half = S.params.epsilon / 2;
    return to_double(d < half ? d : half);
}

}  // namespace

PipelineContext setup_pipeline(const LatticePointSet& S, const EmbedConfig& config) {
    int k = resolve_k(S, config);
    auto [R, cert] =
        find_good_projection(S, k, S.params.epsilon, config.max_attempts, config.seed);

    std::vector<ScaledVector> images(S.size());
    std::vector<std::vector<double>> image_doubles(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        images[i] = apply_projection(R, S.points[i]);
        image_doubles[i] = images[i].to_doubles();
    }

    EnclosingBall ball = minimal_enclosing_ball(image_doubles, config.meb_tol);
    ScaledVector center = snap_center_to_lattice(ball, S.params.lambda0, k);

    std::vector<ScaledVector> centered(S.size());
    double n_flat = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        centered[i] = images[i];
        for (int j = 0; j < k; ++j) centered[i].numerators[j] -= center.numerators[j];
        n_flat = std::max(n_flat, std::sqrt(to_double(centered[i].sq_norm())));
    }
    n_flat = std::max(n_flat * (1 + 1e-12), 1e-12);

    return PipelineContext{S, k, std::move(R), std::move(cert), std::move(center),
                           std::move(centered), n_flat};
}

EmbeddingResult embed_with_context(const PipelineContext& ctx, const Int& lambda,
                                   const EmbedConfig& config) {
    if (lambda < 1) throw Error("lambda must be >= 1");
    const Int& l0 = ctx.input.params.lambda0;

    EmbeddingResult res{ctx.input,  lambda,     ctx.projection, ctx.jl_certificate,
                        ctx.center, {},         {},             ctx.k};
    res.outputs.resize(ctx.input.size());

    Int root;
    bool square = is_perfect_square(Int(ctx.k), &root);
    if (square && lambda % root == 0) {
        // lambda*y_i lands exactly on (1/lambda0)Z^k: z_i = (lambda/sqrt(k))*num_i
        Int f = lambda / root;
        for (std::size_t i = 0; i < ctx.input.size(); ++i) {
            res.outputs[i].resize(ctx.k);
            for (int j = 0; j < ctx.k; ++j)
                res.outputs[i][j] = f * ctx.centered[i].numerators[j];
        }
        res.rotation_witness.rotation = BlockRotation::identity(ctx.k);
        res.rotation_witness.lambda = lambda;
        res.rotation_witness.target = rotation_delta(ctx.input);
        res.rotation_witness.achieved = 0;
        res.rotation_witness.strategy = RotationStrategy::identity;
    } else {
        double lam = lambda.convert_to<double>();
        std::vector<std::vector<double>> scaled(ctx.input.size());
        for (std::size_t i = 0; i < ctx.input.size(); ++i) {
            scaled[i] = ctx.centered[i].to_doubles();
            for (double& x : scaled[i]) x *= lam;
        }
        RotationWitness w =
            search_rotation(scaled, l0, rotation_delta(ctx.input), config.rotation_budget);
        w.lambda = lambda;
        for (std::size_t i = 0; i < ctx.input.size(); ++i)
            res.outputs[i] =
                nearest_lattice_point(apply_block_rotation(w.rotation, scaled[i]), l0);
        res.rotation_witness = std::move(w);
    }

    for (std::size_t i = 0; i < res.outputs.size(); ++i)
        for (std::size_t j = i + 1; j < res.outputs.size(); ++j)
            if (res.outputs[i] == res.outputs[j])
                throw InjectivityViolation("outputs " + std::to_string(i) + "," +
                                           std::to_string(j) + " coincide");

    DistortionReport rep = certify(res);
    if (!rep.passed) throw CertificationFailed(std::move(rep));
    return res;
}

EmbeddingResult embed(const LatticePointSet& S, const Int& lambda,
                      const EmbedConfig& config) {
    return embed_with_context(setup_pipeline(S, config), lambda, config);
}

DistortionReport certify(const EmbeddingResult& result) {
    return certify_outputs(result.input, result.outputs, result.lambda, true);
}

Rat injectivity_floor(const Int& lambda0, const Rat& epsilon) {
    if (!(epsilon > 0 && epsilon < Rat(1, lambda0 + 1)))
        throw EpsilonOutOfRange("epsilon must lie strictly in (0, 1/(lambda0+1))");
    return Rat(1, lambda0) - epsilon * (1 + Rat(1, lambda0));
}

NaiveBaselineResult naive_baseline(const LatticePointSet& S, const ProjectionMatrix& R,
                                   const Int& lambda) {
    const Int& l0 = S.params.lambda0;
    double lam = lambda.convert_to<double>();
    NaiveBaselineResult out;
    out.outputs.resize(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        std::vector<double> v = apply_projection(R, S.points[i]).to_doubles();
        for (double& x : v) x *= lam;
        out.outputs[i] = nearest_lattice_point(v, l0);
        out.max_rounding_distance =
            std::max(out.max_rounding_distance, rounding_distance(v, l0));
    }
    out.report = certify_outputs(S, out.outputs, lambda, false);
    return out;
}

std::pair<Int, EmbeddingResult> search_lambda(const LatticePointSet& S,
                                              const EmbedConfig& config) {
    PipelineContext ctx = setup_pipeline(S, config);
    const Int& l0 = S.params.lambda0;

    Int root;
    ValueDescriptor t = is_perfect_square(Int(ctx.k), &root)
                            ? ValueDescriptor::make_rational(Rat(1, root))
                            : ValueDescriptor::inv_sqrt(static_cast<unsigned>(ctx.k));

    // Seed lambda candidates so that the unrotated per-point error at
    // lambda = n1 is at most eps/(4*lambda0^2), which makes the final
    // certification bound hold with a factor-2 slack on the rounding budget.
    Int n1 = 1;
    Rat delta_seed = S.params.epsilon / Rat(4 * l0 * l0);
    Rat n_rat = rat_from_double(std::sqrt(static_cast<double>(ctx.k)) * ctx.n_flat *
                                (1 + 1e-9));
    if (delta_seed / n_rat < 1) n1 = find_scaling(t, delta_seed, n_rat).n1;

    auto try_lambda = [&](const Int& lam) -> std::optional<EmbeddingResult> {
        try {
            return embed_with_context(ctx, lam, config);
        } catch (const RotationNotFound&) {
        } catch (const CertificationFailed&) {
        } catch (const InjectivityViolation&) {
        }
        return std::nullopt;
    };

    for (Int lam = n1; lam <= config.max_lambda; lam += n1)
        if (auto r = try_lambda(lam)) return {lam, std::move(*r)};
    for (Int lam = 1; lam <= config.max_lambda; ++lam) {
        if (lam % n1 == 0) continue;  // already tried
        if (auto r = try_lambda(lam)) return {lam, std::move(*r)};
    }
    throw LambdaSearchExhausted("no certifying lambda up to " + config.max_lambda.str());
}

}  // namespace latjl
