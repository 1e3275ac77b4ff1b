#pragma once

#include <string>

#include <json.hpp>

#include "chebdesign/chebyshev.hpp"
#include "chebdesign/design.hpp"
#include "chebdesign/improve.hpp"
#include "chebdesign/matrices.hpp"
#include "chebdesign/models.hpp"

namespace chebdesign {

using nlohmann::json;

// Parse a file, rethrowing parse errors with the file name and byte offset.
json load_json_file(const std::string& path);

// {"A": a, "B": b}
json domain_to_json(const IntervalDomain& domain);
IntervalDomain domain_from_json(const json& j);

// {"support": [...], "weights": [...]}; missing weights mean uniform.
json design_to_json(const Design& design);
Design design_from_json(const json& j, const IntervalDomain& domain);

// {"type": "polynomial"|"weighted"|"rational"|"sin", "params": {...},
//  "domain": {...}}
ModelSpec model_from_json(const json& j);

json matrix_to_json(const Eigen::MatrixXd& m);

json witness_to_json(const ChebWitness& w);
json cheb_report_to_json(const ChebReport& r);

// All ImprovementResult fields plus the echo of the original design.
json improvement_to_json(const ImprovementResult& r, const Design& original);

json admissibility_to_json(const AdmissibilityReport& r);

}  // namespace chebdesign
