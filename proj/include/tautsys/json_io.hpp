#pragma once

#include <string>

#include <json.hpp>

#include "tautsys/periods.hpp"
#include "tautsys/systems.hpp"
#include "tautsys/verify.hpp"
#include "tautsys/volform.hpp"

namespace tautsys {

using Json = nlohmann::json;

// Keys are sorted and rationals are in lowest terms, so equal values always
// serialize to identical bytes.
std::string canonical_dump(const Json& j);

// Sparse exponent as [[index, exponent], ...].
Json exp_to_json(const ExpVec& e);
ExpVec exp_from_json(const Json& j);

// {"vars": n, "terms": [{"exp": dense, "num", "den"}]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"N", "v0", "distinguished", "T", "coeffs": [{"exp", "num", "den"}]}
Json series_to_json(const SparseSeries& s);
SparseSeries series_from_json(const Json& j);

Json op_to_json(const DiffOp& op);
DiffOp op_from_json(const Json& j, std::size_t nvars);

Json system_to_json(const TautSystem& sys);
TautSystem system_from_json(const Json& j);

Json report_to_json(const AnnihilationReport& r);
Json lie_closure_to_json(const LieClosureReport& r);
Json volform_to_json(const VolformCheck& c);
Json readings_to_json(const std::vector<ReadingCheck>& checks);

// One line per generator group: "<group>: <passed>/<total> pass".
std::string report_summary(const AnnihilationReport& r);

}  // namespace tautsys
