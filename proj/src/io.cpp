#include "wiltonlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wiltonlab::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

const char* method_name(moment_method m) {
  switch (m) {
    case moment_method::importance_mc:
      return "importance_mc";
    case moment_method::stratified_mc:
      return "stratified_mc";
    case moment_method::oracle_quadrature:
      return "oracle_quadrature";
  }
  return "unknown";
}

nlohmann::ordered_json moment_row(const moment_estimate& e) {
  nlohmann::ordered_json row;
  row["K"] = e.k;
  row["value"] = e.value;
  row["std_error"] = e.std_error;
  row["prediction"] = prediction(e.k);
  row["ratio_to_prediction"] = e.ratio_to_prediction;
  row["method"] = method_name(e.method);
  row["samples"] = e.samples;
  row["seed"] = e.seed;
  return row;
}

std::string moments_json(const nlohmann::ordered_json& config,
                         const std::vector<moment_estimate>& rows) {
  nlohmann::ordered_json doc;
  doc["command"] = "moments";
  doc["config"] = config;
  doc["reference_ratio"] = prediction(1);  // 2 exp(-A(1))
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& e : rows) doc["results"].push_back(moment_row(e));
  return doc.dump(2) + "\n";
}

std::string moments_csv(const std::vector<moment_estimate>& rows) {
  std::string out =
      "K,value,std_error,prediction,ratio_to_prediction,method,samples,seed\n";
  for (const auto& e : rows) {
    out += std::to_string(e.k);
    out += ',';
    out += format_double(e.value);
    out += ',';
    out += format_double(e.std_error);
    out += ',';
    out += format_double(prediction(e.k));
    out += ',';
    out += format_double(e.ratio_to_prediction);
    out += ',';
    out += method_name(e.method);
    out += ',';
    out += std::to_string(e.samples);
    out += ',';
    out += std::to_string(e.seed);
    out += '\n';
  }
  return out;
}

std::string scan_json(const nlohmann::ordered_json& config,
                      const std::vector<scan_record>& rows) {
  nlohmann::ordered_json doc;
  doc["command"] = "scan";
  doc["config"] = config;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["r"] = r.r;
    row["b"] = r.b;
    row["c0"] = r.value;
    row["c0_over_b"] = r.normalized;
    doc["results"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

std::string scan_csv(const std::vector<scan_record>& rows) {
  std::string out = "r,b,c0,c0_over_b\n";
  for (const auto& r : rows) {
    out += std::to_string(r.r);
    out += ',';
    out += std::to_string(r.b);
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += format_double(r.normalized);
    out += '\n';
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
  const std::size_t written = std::fwrite(content.data(), 1, content.size(), f);
  const bool flushed = std::fclose(f) == 0;
  if (written != content.size() || !flushed) {
    std::remove(tmp.c_str());
    throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace wiltonlab::io
