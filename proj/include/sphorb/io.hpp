#pragma once

// JSON and TSV serialisation. Roots and words are JSON integer arrays with
// 1-based simple indices; a Weyl element is written as its reduced word.

#include "sphorb/certs.hpp"
#include "sphorb/demazure.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sphorb {

using json = nlohmann::json;

inline json to_json(const LatticeVector &v) { return v.to_vector(); }
inline json to_json(SimpleSet s) { return s.indices(); }
inline json to_json(const WeylElement &w) { return w.reduced_word(); }

inline std::string join(const std::vector<int> &v, const char *sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

inline LatticeVector root_from_json(const json &j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("root must be an integer array, got " + j.dump());
  if (static_cast<int>(j.size()) != rank)
    throw std::invalid_argument("root " + j.dump() + " must have " + std::to_string(rank) + " entries");
  LatticeVector v(rank);
  for (int k = 0; k < rank; ++k) {
    if (!j[k].is_number_integer()) throw std::invalid_argument("root entries must be integers: " + j.dump());
    v[k] = j[k].get<int>();
  }
  return v;
}

inline std::vector<int> indices_from_json(const json &j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array, got " + j.dump());
  std::vector<int> out;
  for (const auto &x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected integers, got " + j.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

inline json to_json(const SphericalDatum &d) {
  return json{{"type", d.type.name()},
              {"pi", to_json(d.pi)},
              {"w_word", to_json(d.w)},
              {"length", d.length},
              {"rank", d.rank_one_minus},
              {"dimension", d.dimension},
              {"central", d.central}};
}

inline json to_json(const StepOutcome &o) {
  json c = json::array();
  for (const auto &w : o.candidates) c.push_back(to_json(w));
  return json{{"case", o.case_id}, {"candidates", c}};
}

inline json to_json(const ExclusionCert &c) {
  json j{{"type", c.type.name()},
         {"pi", to_json(c.pi)},
         {"gamma", to_json(c.gamma)},
         {"sigma", c.sigma},
         {"label", c.label}};
  if (c.expected_cond2) {
    json e = json::array();
    for (const auto &r : *c.expected_cond2) e.push_back(to_json(r));
    j["expected_cond2"] = e;
  }
  return j;
}

inline json to_json(const CertReport &r) {
  json w = json::array();
  for (const auto &x : r.cond2_witnesses) w.push_back(to_json(x));
  json j{{"pass", r.pass}, {"cond1", r.cond1}, {"cond3", r.cond3}, {"cond4", r.cond4_noninvolution},
         {"cond2_witnesses", w}};
  if (r.cond2_match) j["cond2_match"] = *r.cond2_match;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

/// Parses one certificate; every error message carries the label (or the
/// position when there is no label).
inline ExclusionCert cert_from_json(const json &j, std::size_t position = 0) {
  std::string label = "#" + std::to_string(position);
  if (j.is_object() && j.contains("label") && j["label"].is_string()) label = j["label"].get<std::string>();
  try {
    if (!j.is_object()) throw std::invalid_argument("entry is not an object");
    for (const char *key : {"type", "pi", "gamma", "sigma"})
      if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    if (!j["type"].is_string()) throw std::invalid_argument("type must be a string");
    ExclusionCert c;
    c.label = j.contains("label") ? label : "";
    c.type = RootSystemType::parse(j["type"].get<std::string>());
    const int n = c.type.rank;
    for (int i : indices_from_json(j["pi"])) {
      if (i < 1 || i > n) throw std::invalid_argument("pi index " + std::to_string(i) + " out of range");
      c.pi.insert(i);
    }
    c.gamma = root_from_json(j["gamma"], n);
    c.sigma = indices_from_json(j["sigma"]);
    if (j.contains("expected_cond2")) {
      std::vector<LatticeVector> e;
      if (!j["expected_cond2"].is_array()) throw std::invalid_argument("expected_cond2 must be an array");
      for (const auto &r : j["expected_cond2"]) e.push_back(root_from_json(r, n));
      c.expected_cond2 = std::move(e);
    }
    const auto rs = RootSystem::get(c.type);
    if (!rs->is_root(c.gamma)) throw std::invalid_argument("gamma " + c.gamma.str() + " is not a root");
    ExclusionCert probe = c;
    probe.label = label;
    validate(probe);
    return c;
  } catch (const CertError &) {
    throw;
  } catch (const std::exception &e) {
    throw CertError(label, e.what());
  }
}

/// All certificates in a JSON array, or an exception; never a partial list.
inline std::vector<ExclusionCert> parse_certs(const json &doc) {
  if (doc.is_null()) return {};
  if (!doc.is_array()) throw std::invalid_argument("certificate document must be a JSON array");
  std::vector<ExclusionCert> out;
  for (std::size_t k = 0; k < doc.size(); ++k) out.push_back(cert_from_json(doc[k], k));
  return out;
}

inline std::vector<ExclusionCert> parse_certs_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  }
  return parse_certs(doc);
}

inline std::vector<ExclusionCert> load_certs(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_certs_text(ss.str());
  } catch (const std::exception &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline json to_json(const std::vector<ExclusionCert> &certs) {
  json a = json::array();
  for (const auto &c : certs) a.push_back(to_json(c));
  return a;
}

inline std::string tsv_header() { return "type\tpi\tw_word\tlength\trank\tdimension\tcentral"; }

inline std::string to_tsv_row(const SphericalDatum &d) {
  std::ostringstream os;
  os << d.type.name() << '\t' << join(d.pi.indices()) << '\t' << join(d.w.reduced_word()) << '\t' << d.length
     << '\t' << d.rank_one_minus << '\t' << d.dimension << '\t' << (d.central ? "yes" : "no");
  return os.str();
}

} // namespace sphorb
