#pragma once

// Command dispatch for the sphorb tool. Argument parsing lives in the tool;
// run() takes an already parsed request so it can be driven from tests.

#include "sphorb/io.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <random>

namespace sphorb::cli {

enum class Format { Auto, Table, Json, Tsv };

struct CommandRequest {
  std::string subcommand; // roots, weyl, pi, dim, step, verify, tables
  std::string type_arg;   // type string, or the file for verify
  std::map<std::string, std::string> options; // pi, word, s, format, seed
};

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

inline const char *usage_text() {
  return "usage: sphorb <command> [args]\n"
         "  roots  TYPE                      positive roots\n"
         "  weyl   TYPE [--word W | --seed N] element data (w0 when no word)\n"
         "  pi     TYPE                      admissible pi with dimensions\n"
         "  dim    TYPE --pi I,J,..          datum for one pi\n"
         "  step   TYPE --word W --s I       involution step\n"
         "  verify FILE                      check a certificate file\n"
         "  tables                           pi tables for every type of rank <= 8\n"
         "options: --format {table,json,tsv}\n";
}

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<int> parse_index_list(const std::string &s, const std::string &flag) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      const int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception &) {
      throw UsageError("--" + flag + ": '" + cur + "' is not an integer");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '[' || c == ']') flush();
    else cur += c;
  }
  flush();
  return out;
}

namespace detail {

inline Format format_of(const CommandRequest &r) {
  const auto it = r.options.find("format");
  if (it == r.options.end() || it->second.empty()) return Format::Auto;
  if (it->second == "table") return Format::Table;
  if (it->second == "json") return Format::Json;
  if (it->second == "tsv") return Format::Tsv;
  throw UsageError("--format must be table, json or tsv, got '" + it->second + "'");
}

inline std::optional<std::string> opt(const CommandRequest &r, const std::string &key) {
  const auto it = r.options.find(key);
  if (it == r.options.end()) return std::nullopt;
  return it->second;
}

inline RootSystemPtr type_of(const CommandRequest &r) {
  if (r.type_arg.empty()) throw UsageError(r.subcommand + ": missing TYPE argument");
  return RootSystem::get(RootSystemType::parse(r.type_arg));
}

inline Word word_of(const RootSystem &rs, const std::string &s) {
  Word w = parse_index_list(s, "word");
  for (int i : w) rs.check_index(i);
  return w;
}

inline std::string bracket(const std::vector<int> &v) { return "[" + join(v) + "]"; }

inline void print_pi_table(std::ostream &out, const std::vector<SphericalDatum> &data) {
  out << std::left << std::setw(6) << "type" << std::setw(20) << "pi" << std::setw(8) << "length" << std::setw(6)
      << "rank" << std::setw(10) << "dimension"
      << "w\n";
  for (const auto &d : data) {
    out << std::setw(6) << d.type.name() << std::setw(20) << (d.pi.str() + (d.central ? " *" : ""))
        << std::setw(8) << d.length << std::setw(6) << d.rank_one_minus << std::setw(10) << d.dimension
        << bracket(d.w.reduced_word()) << '\n';
  }
}

inline int cmd_roots(const CommandRequest &r, std::ostream &out) {
  const auto rs = type_of(r);
  const Format f = format_of(r);
  if (f == Format::Json) {
    json roots = json::array();
    for (const auto &b : rs->positive_roots())
      roots.push_back({{"root", to_json(b)},
                       {"height", b.height()},
                       {"length", rs->length_of(b) == RootLength::Long ? "long" : "short"},
                       {"depth", rs->depth(b)}});
    json cartan = json::array();
    for (int i = 0; i < rs->rank(); ++i) {
      json row = json::array();
      for (int j = 0; j < rs->rank(); ++j) row.push_back(rs->cartan()(i, j));
      cartan.push_back(row);
    }
    out << json{{"type", rs->name()},
                {"cartan", cartan},
                {"positive_roots", roots},
                {"highest_root", to_json(rs->highest_root())}}
               .dump()
        << '\n';
    return kOk;
  }
  if (f == Format::Tsv) {
    out << "root\theight\tlength\tdepth\n";
    for (const auto &b : rs->positive_roots())
      out << join(b.to_vector()) << '\t' << b.height() << '\t'
          << (rs->length_of(b) == RootLength::Long ? "long" : "short") << '\t' << rs->depth(b) << '\n';
    return kOk;
  }
  out << rs->name() << ": " << rs->num_positive_roots() << " positive roots, highest " << rs->highest_root()
      << '\n';
  out << std::left << std::setw(26) << "root" << std::setw(8) << "height" << std::setw(8) << "length"
      << "depth\n";
  for (const auto &b : rs->positive_roots())
    out << std::setw(26) << b.str() << std::setw(8) << b.height() << std::setw(8)
        << (rs->length_of(b) == RootLength::Long ? "long" : "short") << rs->depth(b) << '\n';
  return kOk;
}

inline int cmd_weyl(const CommandRequest &r, std::ostream &out) {
  const auto rs = type_of(r);
  Word word;
  if (auto w = opt(r, "word")) {
    word = word_of(*rs, *w);
  } else if (auto seed = opt(r, "seed")) {
    std::mt19937_64 gen(std::stoull(*seed));
    std::uniform_int_distribution<int> letter(1, rs->rank());
    word.resize(2 * rs->num_positive_roots());
    for (int &x : word) x = letter(gen);
  } else {
    word = longest_element(rs).reduced_word();
  }
  const WeylElement w = WeylElement::from_word(rs, word);
  json th = json::array();
  if (!opt(r, "word") && !opt(r, "seed"))
    for (int j : theta(rs)) th.push_back(j);
  json m = json::array();
  for (int i = 0; i < w.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < w.rank(); ++j) row.push_back(w.matrix()(i, j));
    m.push_back(row);
  }
  const json j{{"type", rs->name()},
               {"word", to_json(w)},
               {"length", w.length()},
               {"involution", w.is_involution()},
               {"rank_one_minus", rank_one_minus(w)},
               {"fixed_simples", to_json(fixed_simples(w))},
               {"matrix", m}};
  const Format f = format_of(r);
  if (f == Format::Table || f == Format::Tsv) {
    out << "type           " << rs->name() << "\nreduced word   " << bracket(w.reduced_word()) << "\nlength         "
        << w.length() << "\ninvolution     " << (w.is_involution() ? "yes" : "no") << "\nrk(1-w)        "
        << rank_one_minus(w) << "\nfixed simples  " << fixed_simples(w).str() << "\nmatrix\n"
        << w.matrix() << '\n';
    if (!th.empty()) out << "theta          " << th.dump() << '\n';
    return kOk;
  }
  json jj = j;
  if (!th.empty()) jj["theta"] = th;
  out << jj.dump() << '\n';
  return kOk;
}

inline int cmd_pi(const CommandRequest &r, std::ostream &out) {
  const auto rs = type_of(r);
  const auto data = enumerate_pi(rs);
  const Format f = format_of(r);
  if (f == Format::Json) {
    json a = json::array();
    for (const auto &d : data) a.push_back(to_json(d));
    out << a.dump() << '\n';
  } else if (f == Format::Tsv) {
    out << tsv_header() << '\n';
    for (const auto &d : data) out << to_tsv_row(d) << '\n';
  } else {
    print_pi_table(out, data);
  }
  return kOk;
}

inline int cmd_dim(const CommandRequest &r, std::ostream &out) {
  const auto rs = type_of(r);
  const auto p = opt(r, "pi");
  if (!p) throw UsageError("dim: --pi is required (use --pi '' for the empty set)");
  SimpleSet pi;
  for (int i : parse_index_list(*p, "pi")) {
    rs->check_index(i);
    pi.insert(i);
  }
  const SphericalDatum d = make_datum(rs, pi);
  const Format f = format_of(r);
  if (f == Format::Table) print_pi_table(out, {d});
  else if (f == Format::Tsv) out << tsv_header() << '\n' << to_tsv_row(d) << '\n';
  else out << to_json(d).dump() << '\n';
  return kOk;
}

inline int cmd_step(const CommandRequest &r, std::ostream &out) {
  const auto rs = type_of(r);
  const auto w = opt(r, "word");
  const auto s = opt(r, "s");
  if (!s) throw UsageError("step: --s is required");
  const auto letters = parse_index_list(*s, "s");
  if (letters.size() != 1) throw UsageError("step: --s takes one simple index");
  const WeylElement e = WeylElement::from_word(rs, w ? word_of(*rs, *w) : Word{});
  const StepOutcome o = involution_step(e, letters[0]);
  if (format_of(r) == Format::Table) {
    out << "case " << o.case_id << ":";
    for (const auto &c : o.candidates) out << ' ' << bracket(c.reduced_word());
    out << '\n';
  } else {
    out << to_json(o).dump() << '\n';
  }
  return kOk;
}

inline int cmd_verify(const CommandRequest &r, std::ostream &out) {
  if (r.type_arg.empty()) throw UsageError("verify: missing FILE argument");
  const auto certs = load_certs(r.type_arg);
  const VerifySummary s = verify_all(certs);
  const Format f = format_of(r);
  if (f == Format::Json) {
    json reps = json::array();
    for (std::size_t k = 0; k < certs.size(); ++k) {
      json e = to_json(s.reports[k]);
      e["label"] = certs[k].label;
      reps.push_back(e);
    }
    out << json{{"passed", s.passed}, {"failed", s.failed}, {"reports", reps}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < certs.size(); ++k)
      if (!s.reports[k].pass) out << "FAIL  " << certs[k].label << "  (" << failed_conditions(s.reports[k]) << ")\n";
    out << s.passed << " passed, " << s.failed << " failed\n";
  }
  return s.failed == 0 ? kOk : kVerifyFailed;
}

inline int cmd_tables(const CommandRequest &r, std::ostream &out) {
  const Format f = format_of(r);
  json all = json::array();
  if (f == Format::Tsv) out << tsv_header() << '\n';
  for (const auto &t : all_types()) {
    const auto data = enumerate_pi(RootSystem::get(t));
    if (f == Format::Json) {
      for (const auto &d : data) all.push_back(to_json(d));
    } else if (f == Format::Tsv) {
      for (const auto &d : data) out << to_tsv_row(d) << '\n';
    } else {
      print_pi_table(out, data);
      out << '\n';
    }
  }
  if (f == Format::Json) out << all.dump() << '\n';
  return kOk;
}

} // namespace detail

/// Executes one command. Exit codes: 0 ok, 1 certificate failure,
/// 2 usage error, 3 domain error.
inline int run(const CommandRequest &r, std::ostream &out, std::ostream &err) {
  using namespace detail;
  try {
    if (r.subcommand == "roots") return cmd_roots(r, out);
    if (r.subcommand == "weyl") return cmd_weyl(r, out);
    if (r.subcommand == "pi") return cmd_pi(r, out);
    if (r.subcommand == "dim") return cmd_dim(r, out);
    if (r.subcommand == "step") return cmd_step(r, out);
    if (r.subcommand == "verify") return cmd_verify(r, out);
    if (r.subcommand == "tables") return cmd_tables(r, out);
    err << "unknown command '" << r.subcommand << "'\n" << usage_text();
    return kUsage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n' << usage_text();
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

} // namespace sphorb::cli
