#include "ftlab/lab/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ftlab/ensemble/deformation.hpp"
#include "ftlab/equilibrium/potential.hpp"

namespace ftlab::lab {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

void validate(LabConfig& c) {
  if (c.potential.empty() || c.n_list.empty() || c.s_list.empty() || c.fredholm.t_list.empty())
    throw ConfigError("potential, n_list, s_list and fredholm.t_list must be nonempty");
  if (!(c.t > 0.0)) throw ConfigError("t must be positive");
  if (!std::is_sorted(c.n_list.begin(), c.n_list.end()) ||
      std::adjacent_find(c.n_list.begin(), c.n_list.end()) != c.n_list.end())
    throw ConfigError("n_list must be strictly ascending");
  if (c.n_list.front() < 1) throw ConfigError("n_list entries must be positive");
  if (c.workers < 1) throw ConfigError("workers must be positive");
  if (c.fredholm.m < 8 || !(c.fredholm.scale > 0.0)) throw ConfigError("fredholm needs m >= 8 and scale > 0");
  for (double t : c.fredholm.t_list)
    if (!(t > 0.0)) throw ConfigError("fredholm.t_list entries must be positive");
  if (c.idpii.steps < 1 || !(c.idpii.h_xi > 0.0) || !(c.idpii.s_max > c.idpii.s_min) ||
      !(c.idpii.xi_hi > c.idpii.xi_lo))
    throw ConfigError("idpii grid is invalid");
  if (c.deformations.empty()) {
    c.deformations = {{0.0, -c.t}, {0.0, -c.t, 0.0, -0.1}};
  }
  try {
    (void)Potential(Polynomial(c.potential));
    for (const auto& q : c.deformations) {
      const DeformationQ d{Polynomial(q)};
      if (std::abs(d.t() - c.t) > 1e-12 * c.t) throw ConfigError("every deformation must have -Q'(0) = t");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (c.timestamp.empty()) {
    const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
    c.timestamp = epoch && *epoch ? epoch : "0";
  }
}

}  // namespace

LabConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(j,
                 {"potential", "t", "deformations", "n_list", "s_list", "fredholm", "idpii", "output_dir", "workers",
                  "timestamp"},
                 "config");
  LabConfig c;
  read(j, "potential", c.potential);
  read(j, "t", c.t);
  read(j, "deformations", c.deformations);
  read(j, "n_list", c.n_list);
  read(j, "s_list", c.s_list);
  read(j, "output_dir", c.output_dir);
  read(j, "workers", c.workers);
  read(j, "timestamp", c.timestamp);
  if (j.contains("fredholm")) {
    const json& f = j.at("fredholm");
    if (!f.is_object()) throw ConfigError("fredholm must be an object");
    reject_unknown(f, {"m", "scale", "t_list"}, "fredholm");
    read(f, "m", c.fredholm.m);
    read(f, "scale", c.fredholm.scale);
    read(f, "t_list", c.fredholm.t_list);
  }
  if (j.contains("idpii")) {
    const json& p = j.at("idpii");
    if (!p.is_object()) throw ConfigError("idpii must be an object");
    reject_unknown(p, {"s_min", "s_max", "xi_lo", "xi_hi", "h_xi", "steps"}, "idpii");
    read(p, "s_min", c.idpii.s_min);
    read(p, "s_max", c.idpii.s_max);
    read(p, "xi_lo", c.idpii.xi_lo);
    read(p, "xi_hi", c.idpii.xi_hi);
    read(p, "h_xi", c.idpii.h_xi);
    read(p, "steps", c.idpii.steps);
  }
  validate(c);
  return c;
}

LabConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

json to_json(const LabConfig& c, bool for_hash) {
  json j = {{"potential", c.potential},
            {"t", c.t},
            {"deformations", c.deformations},
            {"n_list", c.n_list},
            {"s_list", c.s_list},
            {"fredholm", {{"m", c.fredholm.m}, {"scale", c.fredholm.scale}, {"t_list", c.fredholm.t_list}}},
            {"idpii",
             {{"s_min", c.idpii.s_min},
              {"s_max", c.idpii.s_max},
              {"xi_lo", c.idpii.xi_lo},
              {"xi_hi", c.idpii.xi_hi},
              {"h_xi", c.idpii.h_xi},
              {"steps", c.idpii.steps}}},
            {"timestamp", c.timestamp}};
  if (!for_hash) {
    j["output_dir"] = c.output_dir;
    j["workers"] = c.workers;
  }
  return j;
}

}  // namespace

std::string serialize_config(const LabConfig& cfg) { return to_json(cfg, false).dump(2); }

std::string config_hash(const LabConfig& cfg) {
  const std::string text = to_json(cfg, true).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ftlab::lab
