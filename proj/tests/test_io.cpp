#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latjl/embed.hpp"
#include "latjl/instance.hpp"
#include "latjl/io.hpp"

using namespace latjl;

TEST_CASE("point set JSON round trip") {
    Json j = generated_point_set_json(5, 3, Int(2), Int(3), 11);
    auto S = point_set_from_json(j, Rat(1, 4));
    CHECK(S.size() == 5);
    Json j2 = point_set_to_json(S);
    CHECK(j == j2);
}

TEST_CASE("floating-point coordinates are rejected") {
    Json j = {{"lambda0", 1}, {"dim", 1}, {"bound", 2}, {"points", {{1.5}, {0}}}};
    CHECK_THROWS_AS(point_set_from_json(j, Rat(1, 4)), SchemaError);
    Json missing = {{"lambda0", 1}, {"dim", 1}, {"points", {{1}, {0}}}};
    CHECK_THROWS_AS(point_set_from_json(missing, Rat(1, 4)), SchemaError);
}

TEST_CASE("projection JSON round trip") {
    auto R = sample_projection(5, 4, 77);
    auto R2 = projection_from_json(projection_to_json(R));
    CHECK(R.entries == R2.entries);
    CHECK(R.k == R2.k);
    CHECK(R.d == R2.d);
    CHECK(R.seed == R2.seed);
}

TEST_CASE("rotation JSON round trips at full precision") {
    BlockRotation rho{{0.1234567890123456789, 2.718281828459045}, 4};
    auto rho2 = rotation_from_json(rotation_to_json(rho));
    CHECK(rho.angles == rho2.angles);  // bit-exact via shortest round-trip decimals
}

TEST_CASE("scaling witness JSON round trip") {
    auto w = find_scaling(ValueDescriptor::inv_sqrt(2), Rat(1, 20), Rat(1));
    auto w2 = scaling_witness_from_json(scaling_witness_to_json(w));
    CHECK(w2.n1 == w.n1);
    CHECK(w2.p == w.p);
    CHECK(w2.bound == w.bound);
    CHECK(w2.t.kind == w.t.kind);
    CHECK(w2.t.k == w.t.k);
    CHECK(verify_witness_interval(w2));
}

TEST_CASE("embedding result JSON round trip preserves the certified verdict") {
    auto coords = generate_points(4, 4, Int(2), Int(2), 3);
    std::vector<LatticePoint> pts;
    for (auto& c : coords) pts.push_back(LatticePoint{std::move(c), Int(2)});
    LatticePointSet S(std::move(pts), LatticeParams(Int(2), 4, Int(2), Rat(1, 4)));
    EmbedConfig cfg;
    cfg.k = 4;
    cfg.max_attempts = 5000;
    auto res = embed(S, Int(2), cfg);
    auto rep = certify(res);

    auto res2 = embedding_result_from_json(embedding_result_to_json(res));
    auto rep2 = certify(res2);
    CHECK(rep2.passed == rep.passed);
    CHECK(rep2.min_sq_ratio == rep.min_sq_ratio);
    CHECK(rep2.max_sq_ratio == rep.max_sq_ratio);
    CHECK(res2.outputs == res.outputs);
}

TEST_CASE("generated instances are deterministic and in range") {
    auto a = generate_points(8, 3, Int(2), Int(2), 5);
    auto b = generate_points(8, 3, Int(2), Int(2), 5);
    CHECK(a == b);
    for (const auto& p : a) {
        Int s = 0;
        for (const Int& v : p) s += v * v;
        CHECK(s <= Int(16));  // (lambda0 * bound)^2
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a[i] != a[j]);
}

TEST_CASE("infeasible generation is detected") {
    // (1/1)Z^1 within norm 1: only {-1, 0, 1}
    CHECK_THROWS_AS(generate_points(4, 1, Int(1), Int(1), 0), InfeasibleInstance);
    CHECK_NOTHROW(generate_points(3, 1, Int(1), Int(1), 0));
}
