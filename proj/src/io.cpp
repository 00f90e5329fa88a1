#include "latjl/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>

namespace latjl {

namespace {
const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}
}  // namespace

std::string double_to_string(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw Error("double formatting failed");
    return std::string(buf, p);
}

Int int_from_json(const Json& j) {
    if (!j.is_number_integer())
        throw SchemaError("expected an exact integer, got " + j.dump());
    return Int(j.get<long long>());
}

long long int_to_json(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw Error("integer too large for JSON serialization");
    return v.convert_to<long long>();
}

Json point_set_to_json(const LatticePointSet& S) {
    Json j;
    j["lambda0"] = int_to_json(S.params.lambda0);
    j["dim"] = S.params.ambient_dim;
    j["bound"] = int_to_json(S.params.bound);
    Json pts = Json::array();
    for (const auto& p : S.points) {
        Json row = Json::array();
        for (const Int& v : p.numerators) row.push_back(int_to_json(v));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

LatticePointSet point_set_from_json(const Json& j, const Rat& epsilon) {
    Int lambda0 = int_from_json(field(j, "lambda0"));
    int dim = field(j, "dim").get<int>();
    Int bound = int_from_json(field(j, "bound"));
    LatticeParams params(lambda0, dim, bound, epsilon);
    std::vector<LatticePoint> pts;
    for (const auto& row : field(j, "points")) {
        LatticePoint p;
        p.denominator = lambda0;
        for (const auto& v : row) p.numerators.push_back(int_from_json(v));
        pts.push_back(std::move(p));
    }
    return LatticePointSet(std::move(pts), std::move(params));
}

Json projection_to_json(const ProjectionMatrix& R) {
    Json j;
    j["k"] = R.k;
    j["d"] = R.d;
    j["seed"] = R.seed;
    j["attempts_used"] = R.attempts_used;
    Json rows = Json::array();
    for (int i = 0; i < R.k; ++i) {
        Json row = Json::array();
        for (int c = 0; c < R.d; ++c) row.push_back(static_cast<int>(R.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ProjectionMatrix projection_from_json(const Json& j) {
    ProjectionMatrix R;
    R.k = field(j, "k").get<int>();
    R.d = field(j, "d").get<int>();
    R.seed = field(j, "seed").get<std::uint64_t>();
    if (j.contains("attempts_used")) R.attempts_used = j["attempts_used"].get<int>();
    R.entries.reserve(static_cast<std::size_t>(R.k) * R.d);
    for (const auto& row : field(j, "entries"))
        for (const auto& v : row) {
            int e = v.get<int>();
            if (e != 1 && e != -1) throw SchemaError("projection entries must be +-1");
            R.entries.push_back(static_cast<std::int8_t>(e));
        }
    if (R.entries.size() != static_cast<std::size_t>(R.k) * R.d)
        throw SchemaError("projection entry count mismatch");
    return R;
}

Json rotation_to_json(const BlockRotation& rho) {
    Json j;
    j["k"] = rho.k;
    j["angles"] = rho.angles;
    return j;
}

BlockRotation rotation_from_json(const Json& j) {
    BlockRotation rho;
    rho.k = field(j, "k").get<int>();
    rho.angles = field(j, "angles").get<std::vector<double>>();
    if (static_cast<int>(rho.angles.size()) * 2 != rho.k)
        throw SchemaError("rotation needs k/2 angles");
    return rho;
}

Json rotation_witness_to_json(const RotationWitness& w) {
    Json j;
    j["lambda"] = int_to_json(w.lambda);
    j["target"] = w.target;
    j["achieved"] = w.achieved;
    j["strategy"] = to_string(w.strategy);
    j["angles"] = w.rotation.angles;
    j["grid_resolution"] = w.grid_resolution;
    return j;
}

RotationWitness rotation_witness_from_json(const Json& j, int k) {
    RotationWitness w;
    w.lambda = int_from_json(field(j, "lambda"));
    w.target = field(j, "target").get<double>();
    w.achieved = field(j, "achieved").get<double>();
    std::string s = field(j, "strategy").get<std::string>();
    if (s == "identity") w.strategy = RotationStrategy::identity;
    else if (s == "per_block_grid") w.strategy = RotationStrategy::per_block_grid;
    else if (s == "gaussian_integer_hint") w.strategy = RotationStrategy::gaussian_integer_hint;
    else throw SchemaError("unknown rotation strategy '" + s + "'");
    w.rotation.k = k;
    w.rotation.angles = field(j, "angles").get<std::vector<double>>();
    if (j.contains("grid_resolution")) w.grid_resolution = j["grid_resolution"].get<double>();
    if (static_cast<int>(w.rotation.angles.size()) * 2 != k)
        throw SchemaError("rotation witness needs k/2 angles");
    return w;
}

Json scaling_witness_to_json(const ScalingWitness& w) {
    Json j;
    Json t;
    if (w.t.is_rational()) {
        t["kind"] = "rational";
        t["num"] = int_to_json(boost::multiprecision::numerator(w.t.rational_value));
        t["den"] = int_to_json(boost::multiprecision::denominator(w.t.rational_value));
    } else if (w.t.kind == ValueDescriptor::Kind::inv_sqrt) {
        t["kind"] = "inv_sqrt";
        t["k"] = w.t.k;
    } else {
        t["kind"] = "sqrt";
        t["k"] = w.t.k;
    }
    j["t"] = std::move(t);
    j["n1"] = int_to_json(w.n1);
    j["p"] = int_to_json(w.p);
    j["bound"] = rat_to_string(w.bound);
    j["achieved"] = double_to_string(w.achieved);
    return j;
}

ScalingWitness scaling_witness_from_json(const Json& j) {
    ScalingWitness w;
    const Json& t = field(j, "t");
    std::string kind = field(t, "kind").get<std::string>();
    if (kind == "rational")
        w.t = ValueDescriptor::make_rational(
            Rat(int_from_json(field(t, "num")), int_from_json(field(t, "den"))));
    else if (kind == "inv_sqrt")
        w.t = ValueDescriptor::inv_sqrt(field(t, "k").get<unsigned>());
    else if (kind == "sqrt")
        w.t = ValueDescriptor::sqrt(field(t, "k").get<unsigned>());
    else
        throw SchemaError("unknown descriptor kind '" + kind + "'");
    w.n1 = int_from_json(field(j, "n1"));
    w.p = int_from_json(field(j, "p"));
    w.bound = parse_rational(field(j, "bound").get<std::string>());
    w.achieved = std::stod(field(j, "achieved").get<std::string>());
    return w;
}

Json jl_certificate_to_json(const JlCertificate& c) {
    Json j;
    j["epsilon"] = rat_to_string(c.epsilon);
    j["worst_low_ratio"] = double_to_string(c.worst_low_ratio);
    j["worst_high_ratio"] = double_to_string(c.worst_high_ratio);
    j["min_sq_ratio"] = rat_to_string(c.min_sq_ratio);
    j["max_sq_ratio"] = rat_to_string(c.max_sq_ratio);
    j["worst_low_pair"] = {c.worst_low_pair.first, c.worst_low_pair.second};
    j["worst_high_pair"] = {c.worst_high_pair.first, c.worst_high_pair.second};
    j["passed"] = c.passed;
    return j;
}

Json distortion_report_to_json(const DistortionReport& r) {
    Json j;
    j["lower_bound"] = rat_to_string(r.lower_bound);
    j["upper_bound"] = rat_to_string(r.upper_bound);
    j["min_ratio"] = double_to_string(r.min_ratio);
    j["max_ratio"] = double_to_string(r.max_ratio);
    j["min_sq_ratio"] = rat_to_string(r.min_sq_ratio);
    j["max_sq_ratio"] = rat_to_string(r.max_sq_ratio);
    j["worst_low_pair"] = {r.worst_low_pair.first, r.worst_low_pair.second};
    j["worst_high_pair"] = {r.worst_high_pair.first, r.worst_high_pair.second};
    j["passed"] = r.passed;
    j["margin"] = double_to_string(r.margin);
    return j;
}

Json embedding_result_to_json(const EmbeddingResult& r) {
    Json j;
    j["input"] = point_set_to_json(r.input);
    j["epsilon"] = rat_to_string(r.input.params.epsilon);
    j["lambda"] = int_to_json(r.lambda);
    j["k"] = r.k;
    j["projection"] = projection_to_json(r.projection);
    j["jl_certificate"] = jl_certificate_to_json(r.jl_certificate);
    Json center = Json::array();
    for (const Int& v : r.center.numerators) center.push_back(int_to_json(v));
    j["center"] = std::move(center);
    j["rotation_witness"] = rotation_witness_to_json(r.rotation_witness);
    Json outs = Json::array();
    for (const auto& z : r.outputs) {
        Json row = Json::array();
        for (const Int& v : z) row.push_back(int_to_json(v));
        outs.push_back(std::move(row));
    }
    j["outputs"] = std::move(outs);
    return j;
}

EmbeddingResult embedding_result_from_json(const Json& j) {
    Rat eps = parse_rational(field(j, "epsilon").get<std::string>());
    LatticePointSet input = point_set_from_json(field(j, "input"), eps);
    int k = field(j, "k").get<int>();
    EmbeddingResult r{input,
                      int_from_json(field(j, "lambda")),
                      projection_from_json(field(j, "projection")),
                      {},
                      {},
                      rotation_witness_from_json(field(j, "rotation_witness"), k),
                      {},
                      k};
    r.jl_certificate.epsilon = eps;  // full certificate is recomputable on demand
    r.center.denominator = input.params.lambda0;
    r.center.irrational_k = static_cast<unsigned>(k);
    for (const auto& v : field(j, "center")) r.center.numerators.push_back(int_from_json(v));
    for (const auto& row : field(j, "outputs")) {
        std::vector<Int> z;
        for (const auto& v : row) z.push_back(int_from_json(v));
        if (static_cast<int>(z.size()) != k) throw SchemaError("output length mismatch");
        r.outputs.push_back(std::move(z));
    }
    return r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << dump_json(j);
}

}  // namespace latjl
