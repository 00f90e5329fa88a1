#include "latjl/embed.hpp"
#include "latjl/instance.hpp"
#include "latjl/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latjl;

constexpr int kExitPass = 0;
constexpr int kExitCertFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CliOptions {
    std::string epsilon = "0";
    long long lambda0 = 1;
    int k = 0;                 // 0 = choose_k default
    double c_const = 0;        // 0 = unset
    std::uint64_t seed = 0;
    long long lambda = 0;      // 0 = search
    long long max_lambda = 1000000;
    int max_attempts = 64;
    long grid_budget = 500000;
    std::string in, out, csv;
    // gen
    int n = 0, dim = 0;
    long long bound = 1;
    // bench grids
    std::string n_list, dim_list, lambda0_list, epsilon_list, seed_list;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) if (!tok.empty()) out.push_back(tok);
    return out;
}

void print_error_json(const std::string& kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    std::cout << dump_json(j);
}

EmbedConfig make_config(const CliOptions& o) {
    EmbedConfig cfg;
    if (o.k != 0) {
        if (o.k % 2 != 0)
            throw SchemaError("k must be even (block rotations act on coordinate pairs)");
        cfg.k = o.k;
    }
    if (o.c_const != 0) cfg.c_override = o.c_const;
    cfg.seed = o.seed;
    cfg.max_attempts = o.max_attempts;
    cfg.max_lambda = Int(o.max_lambda);
    cfg.rotation_budget.grid_points_per_block = o.grid_budget;
    return cfg;
}

int run_gen(const CliOptions& o) {
    if (o.out.empty()) throw SchemaError("gen requires --out");
    Json j = generated_point_set_json(o.n, o.dim, Int(o.lambda0), Int(o.bound), o.seed);
    write_json_file(o.out, j);
    std::cout << "wrote " << o.n << " points to " << o.out << "\n";
    return kExitPass;
}

int run_embed(const CliOptions& o) {
    if (o.in.empty() || o.out.empty()) throw SchemaError("embed requires --in and --out");
    Rat eps = parse_rational(o.epsilon);
    LatticePointSet S = point_set_from_json(load_json_file(o.in), eps);
    EmbedConfig cfg = make_config(o);

    EmbeddingResult result = [&] {
        if (o.lambda > 0) return embed(S, Int(o.lambda), cfg);
        return search_lambda(S, cfg).second;
    }();
    DistortionReport report = certify(result);

    write_json_file(o.out, embedding_result_to_json(result));
    write_json_file(o.out + ".report.json", distortion_report_to_json(report));

    std::cout << S.size() << " " << result.k << " " << result.lambda << " "
              << double_to_string(report.min_ratio) << " "
              << double_to_string(report.max_ratio) << " "
              << rat_to_string(report.upper_bound) << " "
              << (report.passed ? "PASS" : "FAIL") << "\n";
    return report.passed ? kExitPass : kExitCertFail;
}

int run_certify(const CliOptions& o) {
    if (o.in.empty()) throw SchemaError("certify requires --in");
    EmbeddingResult result = embedding_result_from_json(load_json_file(o.in));
    DistortionReport report;
    try {
        report = certify(result);
    } catch (const DuplicateOutput& e) {
        print_error_json("DuplicateOutput", e.what());
        return kExitCertFail;
    }
    Json rj = distortion_report_to_json(report);
    if (!o.out.empty()) write_json_file(o.out, rj);
    std::cout << dump_json(rj);
    return report.passed ? kExitPass : kExitCertFail;
}

int run_bench(const CliOptions& o) {
    if (o.csv.empty()) throw SchemaError("bench requires --csv");
    auto ns = split_list(o.n_list.empty() ? std::to_string(o.n ? o.n : 8) : o.n_list);
    auto dims = split_list(o.dim_list.empty() ? std::to_string(o.dim ? o.dim : 8) : o.dim_list);
    auto l0s = split_list(o.lambda0_list.empty() ? std::to_string(o.lambda0) : o.lambda0_list);
    auto epss = split_list(o.epsilon_list.empty() ? o.epsilon : o.epsilon_list);
    auto seeds = split_list(o.seed_list.empty() ? std::to_string(o.seed) : o.seed_list);
    if (epss.empty() || epss[0] == "0")
        throw SchemaError("bench requires --epsilons (or --epsilon)");

    std::ofstream csv(o.csv, std::ios::binary);
    if (!csv) throw Error("cannot write '" + o.csv + "'");
    csv << "n,dim,lambda0,epsilon,k,seed,lambda,"
           "naive_min_ratio,naive_max_ratio,naive_max_round_dist,naive_verdict,"
           "pipe_min_ratio,pipe_max_ratio,pipe_verdict,"
           "lower_bound,upper_bound,embed_ms,status\n";

    for (const auto& ns_ : ns)
        for (const auto& ds_ : dims)
            for (const auto& l0_ : l0s)
                for (const auto& es_ : epss)
                    for (const auto& ss_ : seeds) {
                        int n = std::stoi(ns_), dim = std::stoi(ds_);
                        long long l0 = std::stoll(l0_);
                        std::uint64_t seed = std::stoull(ss_);
                        csv << n << "," << dim << "," << l0 << "," << es_ << ",";
                        try {
                            Rat eps = parse_rational(es_);
                            Json pj = generated_point_set_json(n, dim, Int(l0),
                                                               Int(o.bound), seed);
                            LatticePointSet S = point_set_from_json(pj, eps);
                            CliOptions cell = o;
                            cell.seed = seed;
                            EmbedConfig cfg = make_config(cell);
                            auto t0 = std::chrono::steady_clock::now();
                            auto [lambda, result] = search_lambda(S, cfg);
                            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count();
                            DistortionReport rep = certify(result);
                            NaiveBaselineResult nb =
                                naive_baseline(S, result.projection, lambda);
                            csv << result.k << "," << seed << "," << lambda << ","
                                << double_to_string(nb.report.min_ratio) << ","
                                << double_to_string(nb.report.max_ratio) << ","
                                << double_to_string(nb.max_rounding_distance) << ","
                                << (nb.report.passed ? "PASS" : "FAIL") << ","
                                << double_to_string(rep.min_ratio) << ","
                                << double_to_string(rep.max_ratio) << ","
                                << (rep.passed ? "PASS" : "FAIL") << ","
                                << rat_to_string(rep.lower_bound) << ","
                                << rat_to_string(rep.upper_bound) << "," << ms
                                << ",OK\n";
                        } catch (const std::exception& e) {
                            csv << ",,,,,,,,,,,,," << "ERROR\n";
                            std::cerr << "cell failed: " << e.what() << "\n";
                        }
                        csv.flush();
                    }
    std::cout << "wrote " << o.csv << "\n";
    return kExitPass;
}

void add_common(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--epsilon", o.epsilon, "distortion budget, exact rational string");
    cmd->add_option("--lambda0", o.lambda0, "lattice denominator");
    cmd->add_option("--k", o.k, "target dimension (even); default from the JL bound");
    cmd->add_option("--c-const", o.c_const, "override constant in k = c*ln(n)/eps^2");
    cmd->add_option("--seed", o.seed, "PRNG seed");
    cmd->add_option("--lambda", o.lambda, "fixed scaling factor (omit to search)");
    cmd->add_option("--max-lambda", o.max_lambda, "lambda search cap");
    cmd->add_option("--max-attempts", o.max_attempts, "projection resampling cap");
    cmd->add_option("--grid-budget", o.grid_budget, "rotation grid points per block");
    cmd->add_option("--in", o.in, "input file");
    cmd->add_option("--out", o.out, "output file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice-constrained dimensionality reduction with certified distortion"};
    app.require_subcommand(1);
    CliOptions o;

    auto* gen = app.add_subcommand("gen", "generate a random lattice point set");
    gen->add_option("--n", o.n, "number of points")->required();
    gen->add_option("--dim", o.dim, "ambient dimension")->required();
    gen->add_option("--lambda0", o.lambda0, "lattice denominator");
    gen->add_option("--bound", o.bound, "norm bound");
    gen->add_option("--seed", o.seed, "PRNG seed");
    gen->add_option("--out", o.out, "output file")->required();

    auto* embed_cmd = app.add_subcommand("embed", "embed a point set (fixed or searched lambda)");
    add_common(embed_cmd, o);
    auto* search_cmd = app.add_subcommand("search-lambda", "embed with lambda search");
    add_common(search_cmd, o);

    auto* certify_cmd = app.add_subcommand("certify", "re-certify a stored embedding result");
    certify_cmd->add_option("--in", o.in, "embedding result file")->required();
    certify_cmd->add_option("--out", o.out, "report output file");

    auto* bench = app.add_subcommand("bench", "parameter sweep with CSV output");
    add_common(bench, o);
    bench->add_option("--ns", o.n_list, "comma list of n values");
    bench->add_option("--dims", o.dim_list, "comma list of dims");
    bench->add_option("--lambda0s", o.lambda0_list, "comma list of lambda0 values");
    bench->add_option("--epsilons", o.epsilon_list, "comma list of epsilon rationals");
    bench->add_option("--seeds", o.seed_list, "comma list of seeds");
    bench->add_option("--bound", o.bound, "norm bound for generated instances");
    bench->add_option("--csv", o.csv, "CSV output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(o);
        if (embed_cmd->parsed()) return run_embed(o);
        if (search_cmd->parsed()) { o.lambda = 0; return run_embed(o); }
        if (certify_cmd->parsed()) return run_certify(o);
        if (bench->parsed()) return run_bench(o);
    } catch (const CertificationFailed& e) {
        Json j;
        j["error"] = "CertificationFailed";
        j["report"] = distortion_report_to_json(e.report);
        std::cout << dump_json(j);
        return kExitCertFail;
    } catch (const ProjectionNotFound& e) {
        print_error_json("ProjectionNotFound", e.what());
        return kExitCertFail;
    } catch (const RotationNotFound& e) {
        print_error_json("RotationNotFound", e.what());
        return kExitCertFail;
    } catch (const LambdaSearchExhausted& e) {
        print_error_json("LambdaSearchExhausted", e.what());
        return kExitCertFail;
    } catch (const SchemaError& e) {
        print_error_json("SchemaError", e.what());
        return kExitUsage;
    } catch (const EpsilonOutOfRange& e) {
        print_error_json("EpsilonOutOfRange", e.what());
        return kExitUsage;
    } catch (const InfeasibleInstance& e) {
        print_error_json("InfeasibleInstance", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        print_error_json("InternalError", e.what());
        return kExitInternal;
    }
    return kExitUsage;
}
