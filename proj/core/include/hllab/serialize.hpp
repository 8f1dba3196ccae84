#pragma once

// JSON and CSV forms.
//
//   ExtScalar       {"num": int, "den": int} or "inf"
//   ExponentTuple   {"source": str, "values": [ExtScalar...], "k0": int?, "constant_log2": ExtScalar?}
//   tensor file     {"m": int, "dims": [int...], "seed": uint?, "entries": [double...]}  (row-major)
//   growth CSV      n,trial,seed,method,mixed_norm,norm,ratio
//   region CSV      t1,t2,t3,label
//   perturb CSV     coordinate,direction,eps,perturbed,label,empirical,reason

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hllab/admissibility.hpp"
#include "hllab/norm_estimation.hpp"
#include "hllab/sharpness.hpp"
#include "hllab/tensor.hpp"

namespace hllab {

using json = nlohmann::ordered_json;

json to_json(const ExtScalar& x);
ExtScalar ext_from_json(const json& j);

json to_json(const ExponentTuple& t);
ExponentTuple tuple_from_json(const json& j);

json to_json(const CoefficientTensor& T);
CoefficientTensor tensor_from_json(const json& j);
void write_tensor_file(const std::filesystem::path& path, const CoefficientTensor& T);
CoefficientTensor read_tensor_file(const std::filesystem::path& path);

/// Rows x columns CSV of the 2-way slice T[lead..., :, :]; `lead` fixes the
/// first order-2 indices.
std::string slice_csv(const CoefficientTensor& T, const std::vector<std::size_t>& lead = {});

json to_json(const NormEstimate& e);

json to_json(const GrowthReport& r);
std::string growth_csv(const GrowthReport& r);

json to_json(const RegionSample& r);
std::string region_csv(const RegionSample& r);

json to_json(const std::vector<PerturbRow>& rows);
std::string perturb_csv(const std::vector<PerturbRow>& rows);

/// Shortest round-trip decimal text of a double.
std::string format_double(double x);

}  // namespace hllab
