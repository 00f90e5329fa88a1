#pragma once

#include "latjl/embed.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace latjl {

using Json = nlohmann::json;

// Point-set file: {"lambda0": int, "dim": int, "bound": int,
//                  "points": [[int,...],...]} -- exact integers only.
Json point_set_to_json(const LatticePointSet& S);
LatticePointSet point_set_from_json(const Json& j, const Rat& epsilon);

Json projection_to_json(const ProjectionMatrix& R);
ProjectionMatrix projection_from_json(const Json& j);

Json rotation_to_json(const BlockRotation& rho);
BlockRotation rotation_from_json(const Json& j);

Json rotation_witness_to_json(const RotationWitness& w);
RotationWitness rotation_witness_from_json(const Json& j, int k);

Json scaling_witness_to_json(const ScalingWitness& w);
ScalingWitness scaling_witness_from_json(const Json& j);

Json jl_certificate_to_json(const JlCertificate& c);
Json distortion_report_to_json(const DistortionReport& r);

Json embedding_result_to_json(const EmbeddingResult& r);
EmbeddingResult embedding_result_from_json(const Json& j);

std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Shortest decimal string that round-trips the double.
std::string double_to_string(double x);

Int int_from_json(const Json& j);
long long int_to_json(const Int& v);

}  // namespace latjl
