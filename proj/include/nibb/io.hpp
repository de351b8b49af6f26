#pragma once

// Text serialization of curves, sample batches and identity reports.
//
// CSV files start with one "# {...}" line carrying the metadata as JSON,
// then a header line, then one row per point. JSON files are objects with
// "meta" and "data" members. Reals are written with 17 significant digits,
// so reading a file back reproduces the object exactly.

#include <string>
#include <vector>

#include "nibb/exactcheck.hpp"
#include "nibb/fredholm.hpp"
#include "nibb/samples.hpp"

namespace nibb {

std::string format_real(double v);

std::string curve_to_csv(const CdfCurve& curve);
std::string curve_to_json(const CdfCurve& curve);
// Throws std::invalid_argument on malformed text.
CdfCurve curve_from_csv(const std::string& text);
CdfCurve curve_from_json(const std::string& text);

std::string samples_to_csv(const SampleBatch& batch);
std::string samples_to_json(const SampleBatch& batch);
SampleBatch samples_from_csv(const std::string& text);
SampleBatch samples_from_json(const std::string& text);

// {"meta": {"all_pass", "count", "failures"}, "data": [{identity, parameters, pass, counterexample?}]}
std::string identity_report_json(const std::vector<IdentityResult>& results);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nibb
