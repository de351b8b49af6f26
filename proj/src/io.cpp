#include "nibb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nibb {

using nlohmann::json;

namespace {

json params_json(const std::map<std::string, double>& params) {
  json out = json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

std::map<std::string, double> params_from(const json& j) {
  std::map<std::string, double> out;
  if (j.is_object())
    for (const auto& [k, v] : j.items()) out[k] = v.get<double>();
  return out;
}

json curve_meta(const CdfCurve& curve) {
  return {{"model", to_string(curve.meta.model)}, {"method", curve.meta.method}, {"params", params_json(curve.meta.params)}};
}

void apply_curve_meta(CdfCurve& curve, const json& meta) {
  curve.meta.model = cdf_model_from_string(meta.at("model").get<std::string>());
  curve.meta.method = meta.value("method", "");
  curve.meta.params = params_from(meta.value("params", json::object()));
}

json batch_meta(const SampleBatch& batch) {
  return {{"model", batch.model}, {"seed", batch.seed}, {"n", batch.n()}, {"params", params_json(batch.params)}};
}

void apply_batch_meta(SampleBatch& batch, const json& meta) {
  batch.model = meta.at("model").get<std::string>();
  batch.seed = meta.at("seed").get<std::uint64_t>();
  batch.params = params_from(meta.value("params", json::object()));
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  while (used < s.size() && (s[used] == ' ' || s[used] == '\r')) ++used;
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

// Splits CSV text into the metadata line (without "# "), the header and rows.
struct CsvParts {
  json meta;
  std::string header;
  std::vector<std::string> rows;
};

CsvParts split_csv(const std::string& text) {
  CsvParts parts;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (parts.meta.is_null()) {
        try {
          parts.meta = json::parse(line.substr(1));
        } catch (const json::exception& e) {
          throw std::invalid_argument(std::string("bad metadata line: ") + e.what());
        }
      }
      continue;
    }
    if (!have_header) {
      parts.header = line;
      have_header = true;
      continue;
    }
    parts.rows.push_back(line);
  }
  if (!have_header) throw std::invalid_argument("CSV has no header line");
  return parts;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string curve_to_csv(const CdfCurve& curve) {
  std::string out = "# " + curve_meta(curve).dump() + "\nr,value\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    out += format_real(curve.grid[i]) + "," + format_real(curve.values[i]) + "\n";
  return out;
}

std::string curve_to_json(const CdfCurve& curve) {
  const json j = {{"meta", curve_meta(curve)}, {"data", {{"grid", curve.grid}, {"values", curve.values}}}};
  return j.dump(1) + "\n";
}

CdfCurve curve_from_csv(const std::string& text) {
  const CsvParts parts = split_csv(text);
  CdfCurve curve;
  if (!parts.meta.is_null()) {
    try {
      apply_curve_meta(curve, parts.meta);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("bad curve metadata: ") + e.what());
    }
  }
  if (parts.header != "r,value") throw std::invalid_argument("expected header 'r,value'");
  for (const auto& row : parts.rows) {
    const auto comma = row.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("row without comma: '" + row + "'");
    curve.grid.push_back(parse_real(row.substr(0, comma)));
    curve.values.push_back(parse_real(row.substr(comma + 1)));
  }
  return curve;
}

CdfCurve curve_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    CdfCurve curve;
    apply_curve_meta(curve, j.at("meta"));
    curve.grid = j.at("data").at("grid").get<std::vector<double>>();
    curve.values = j.at("data").at("values").get<std::vector<double>>();
    if (curve.grid.size() != curve.values.size()) throw std::invalid_argument("grid and values differ in length");
    return curve;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad curve JSON: ") + e.what());
  }
}

std::string samples_to_csv(const SampleBatch& batch) {
  std::string out = "# " + batch_meta(batch).dump() + "\nvalue\n";
  for (double v : batch.values) out += format_real(v) + "\n";
  return out;
}

std::string samples_to_json(const SampleBatch& batch) {
  const json j = {{"meta", batch_meta(batch)}, {"data", batch.values}};
  return j.dump(1) + "\n";
}

SampleBatch samples_from_csv(const std::string& text) {
  const CsvParts parts = split_csv(text);
  if (parts.meta.is_null()) throw std::invalid_argument("sample CSV needs its metadata line");
  if (parts.header != "value") throw std::invalid_argument("expected header 'value'");
  SampleBatch batch;
  try {
    apply_batch_meta(batch, parts.meta);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sample metadata: ") + e.what());
  }
  for (const auto& row : parts.rows) batch.values.push_back(parse_real(row));
  if (parts.meta.contains("n") && parts.meta["n"].get<std::size_t>() != batch.n())
    throw std::invalid_argument("sample count does not match header");
  return batch;
}

SampleBatch samples_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SampleBatch batch;
    apply_batch_meta(batch, j.at("meta"));
    batch.values = j.at("data").get<std::vector<double>>();
    return batch;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sample JSON: ") + e.what());
  }
}

std::string identity_report_json(const std::vector<IdentityResult>& results) {
  json data = json::array();
  std::size_t failures = 0;
  for (const auto& r : results) {
    json row = {{"identity", r.identity}, {"parameters", r.parameters}, {"pass", r.pass}};
    if (r.counterexample) row["counterexample"] = *r.counterexample;
    if (!r.pass) ++failures;
    data.push_back(std::move(row));
  }
  const json j = {{"meta", {{"all_pass", failures == 0}, {"count", results.size()}, {"failures", failures}}},
                  {"data", std::move(data)}};
  return j.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace nibb
