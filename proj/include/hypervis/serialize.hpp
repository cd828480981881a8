#ifndef HYPERVIS_SERIALIZE_HPP
#define HYPERVIS_SERIALIZE_HPP

#include <json.hpp>

#include "hypervis/euler_products.hpp"
#include "hypervis/exact_count.hpp"
#include "hypervis/polytopes.hpp"
#include "hypervis/sampling.hpp"

namespace hypervis {

using Json = nlohmann::ordered_json;

// Unbounded integers serialize as decimal strings, rationals as "num/den",
// so no precision is lost in transit.
std::string bigint_str(const BigInt& v);
std::string bigrat_str(const BigRat& v);

Json to_json(const SpectrumSummary& s);
Json to_json(const ExactCountReport& r);
Json to_json(const EulerProductValue& v);
Json to_json(const FamilyReport& r, const char* report_kind);
Json to_json(const SampleReport& r);

/// One CSV row per report: scalar top-level fields only, arrays skipped.
std::string to_csv(const Json& j);

} // namespace hypervis

#endif
