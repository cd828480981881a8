#include "hypervis/serialize.hpp"

#include <sstream>

namespace hypervis {

std::string bigint_str(const BigInt& v) { return v.str(); }

std::string bigrat_str(const BigRat& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

Json to_json(const SpectrumSummary& s) {
    Json j;
    j["count"] = s.count;
    j["min_sin"] = s.min_sin;
    j["max_sin"] = s.max_sin;
    j["mean_sin"] = s.mean_sin;
    j["histogram"] = s.histogram;
    return j;
}

Json to_json(const ExactCountReport& r) {
    Json j;
    j["d"] = r.params.d;
    j["n"] = r.params.n;
    j["omega_count"] = bigint_str(r.omega_count);
    j["sum_sq"] = bigint_str(r.sum_sq);
    j["sum_quartic"] = bigint_str(r.sum_quartic);
    j["a_vis"] = bigrat_str(r.a_vis);
    j["m2_vis"] = bigrat_str(r.m2_vis);
    return j;
}

Json to_json(const EulerProductValue& v) {
    Json j;
    j["value"] = v.value;
    j["truncation_M"] = v.truncation_m;
    j["tail_bound"] = v.tail_bound;
    j["d"] = v.d;
    j["k"] = v.k;
    return j;
}

Json to_json(const FamilyReport& r, const char* report_kind) {
    Json j;
    j["report"] = report_kind;
    j["all_pairs_visible"] = r.all_pairs_visible;
    j["failing_total"] = r.failing_total;
    Json pairs = Json::array();
    for (const auto& [a, b] : r.failing_pairs) pairs.push_back(Json::array({a, b}));
    j["failing_pairs"] = std::move(pairs);
    j["origin_visible"] = r.origin_visible;
    j["distance_min"] = r.distance_min;
    j["distance_max"] = r.distance_max;
    j["distance_mean"] = r.distance_mean;
    j["origin_distances"] = r.origin_distances;
    j["spectrum"] = to_json(r.spectrum);
    return j;
}

Json to_json(const SampleReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["d"] = r.d;
    j["n"] = r.n;
    j["k"] = r.k;
    j["window_center"] = r.window_center;
    j["window_halfwidth"] = r.window_halfwidth;
    j["fraction_in_window"] = r.fraction_in_window;
    j["mean"] = r.mean;
    j["std_error"] = r.std_error;
    j["rejected"] = r.rejected;
    j["accepted"] = r.accepted;
    j["acceptance_rate"] = r.acceptance_rate;
    j["acceptance_std_error"] = r.acceptance_std_error;
    j["mean_dist"] = r.mean_dist;
    return j;
}

std::string to_csv(const Json& j) {
    std::ostringstream header, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (value.is_array() || value.is_object()) continue;
        if (!first) {
            header << ",";
            row << ",";
        }
        first = false;
        header << key;
        if (value.is_string())
            row << value.get<std::string>();
        else
            row << value.dump();
    }
    return header.str() + "\n" + row.str() + "\n";
}

} // namespace hypervis
