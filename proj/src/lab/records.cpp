#include "ftlab/lab/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ftlab/lab/config.hpp"

namespace ftlab::lab {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::info: return "info";
    case Verdict::error: return "error";
  }
  return "error";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void sort_records(std::vector<ResultRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const ResultRecord& a, const ResultRecord& b) {
    if (a.study != b.study) return a.study < b.study;
    const std::size_t n = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
      if (a.params[i].second != b.params[i].second) return a.params[i].second < b.params[i].second;
    }
    return a.params.size() < b.params.size();
  });
}

namespace {

std::string join(const KeyValues& kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ';';
    out += k + '=' + format_double(v);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::json kv_object(const KeyValues& kv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : kv) j[k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_double(v));
  return j;
}

}  // namespace

std::string to_csv(const std::vector<ResultRecord>& records) {
  std::string out = "study,params,value,aux,verdict,timestamp,config_hash,note\n";
  for (const auto& r : records) {
    out += csv_field(r.study) + ',' + csv_field(join(r.params)) + ',' + format_double(r.value) + ',' +
           csv_field(join(r.aux)) + ',' + std::string(verdict_name(r.verdict)) + ',' + csv_field(r.timestamp) + ',' +
           r.config_hash + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ResultRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"study", r.study},
                   {"params", kv_object(r.params)},
                   {"value", std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json(format_double(r.value))},
                   {"aux", kv_object(r.aux)},
                   {"verdict", verdict_name(r.verdict)},
                   {"timestamp", r.timestamp},
                   {"config_hash", r.config_hash},
                   {"note", r.note}});
  }
  return arr.dump(2) + '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  if (ec) throw IoError("cannot create directory '" + parent.string() + "': " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace ftlab::lab
