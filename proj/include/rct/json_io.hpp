#ifndef RCT_JSON_IO_HPP
#define RCT_JSON_IO_HPP
//
// Project     : rct
// Module      : json_io
// Description : JSON encodings used across reports and the CLI
//

#include <json.hpp>

#include <rct/checks.hpp>
#include <rct/drury_arveson.hpp>

namespace rct {

using nlohmann::json;

// matrices: { "rows": n, "cols": m, "data": [[re, im], ...] }, row-major
json matrix_to_json(const Eigen::Ref<const CMat>& a);
CMat matrix_from_json(const json& j);

// tuples: { "dim": m, "arity": d, "commuting": bool, "matrices": [...] }
json tuple_to_json(const OperatorTuple& t);
OperatorTuple tuple_from_json(const json& j, const TolerancePolicy& tol = {});

// words as letter arrays, multi-indices as exponent arrays
json word_to_json(const Word& w);
Word word_from_json(const json& j);
json multi_index_to_json(const MultiIndex& a);
MultiIndex multi_index_from_json(const json& j);

// polynomials: { "d": d, "terms": [ { "alpha": [...], "coef": [re, im] } ] }
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json profile_to_json(const DefectProfile& profile);
json verdict_to_json(const MaximalityVerdict& v);
json annihilator_to_json(const std::optional<AnnihilatorResult>& a, Mode mode);
json battery_to_json(const BatteryReport& report);
json purity_to_json(const PurityReport& report);
json property_summary_to_json(const PropertySummary& summary);

// kernel matrix plus a block-index sidecar mapping words to row ranges
json poisson_to_json(const PoissonKernel& pk);

} // namespace rct

#endif
