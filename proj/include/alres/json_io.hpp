#pragma once

#include <string>

#include <json.hpp>

#include "alres/resolvent.hpp"
#include "alres/verify.hpp"

namespace alres::io {

using json = nlohmann::json;

// Canonical JSON shapes: term lists are [w_exp, lambda_exp, coeff-string]
// triples in ascending exponent order, coefficients as decimal strings so
// arbitrary precision survives transport; object keys sort alphabetically.
// Round-trips are bit-exact.

json to_json(const BiLaurent& p);
BiLaurent bilaurent_from_json(const json& j);

json to_json(const RatFun& r);
RatFun ratfun_from_json(const json& j);

json to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

json to_json(const Potential& p);
Potential potential_from_json(const json& j);
Potential load_potential_file(const std::string& path);

json to_json(const WindowBounds& b);
WindowBounds window_bounds_from_json(const json& j);

json to_json(const KernelWindow& w);
KernelWindow kernel_window_from_json(const json& j);

json to_json(const LambdaExpansion& e);

json to_json(const FailSite& f);
json to_json(const IdentityReport& r);
json to_json(const std::vector<IdentityReport>& rs);
json to_json(const BoundaryPairReport& r);

} // namespace alres::io
