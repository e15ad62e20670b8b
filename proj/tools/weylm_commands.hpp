#pragma once

// Command implementations for the weylm CLI. Each returns its full output and exit code so
// it can be driven from tests without a process boundary.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "weylm/serialize.hpp"
#include "weylm/weylm.hpp"

namespace weylm::cli {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ParseError("unknown format '" + std::string(s) + "' (expected text, json or csv)", std::string(s));
}

inline constexpr const char* kCapEnvVar = "WEYLM_CAP";

/// Cap from WEYLM_CAP when set and valid, otherwise the library default.
inline std::uint64_t default_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad value for ") + kCapEnvVar + ": '" + env + "'", env);
    }
  }
  return kDefaultEnumerationCap;
}

struct RunConfig {
  CartanType type{};
  Format format = Format::text;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool with_oracle = false;
  std::string suite = "all";
  int jobs = 1;
  std::string out;  ///< empty: stdout
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem-max", "normal-form", "rank-lemma", "psi-argmax", "gkp",
                                              "chain-step",  "lattice",     "monotonicity", "oracle", "all"};
  return names;
}

namespace detail {

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string coords_text(const RootSystem& rs, int root) {
  std::string s;
  for (int k = 0; k < rs.rank(); ++k) {
    if (k) s += ' ';
    s += std::to_string(rs.coords(root)[k]);
  }
  return s;
}

inline std::string status(const Report& r) { return r.passed() ? "PASS" : "FAIL"; }

}  // namespace detail

inline CommandResult cmd_roots(const RunConfig& cfg) {
  const RootSystem rs(cfg.type);
  std::ostringstream out;
  switch (cfg.format) {
    case Format::json:
      out << detail::dump(to_json(rs));
      break;
    case Format::csv:
      out << "index,height,coordinates\n";
      for (int r = 0; r < rs.num_positive(); ++r) {
        out << r + 1 << ',' << rs.height(r) << ',' << detail::coords_text(rs, r) << '\n';
      }
      break;
    case Format::text:
      out << to_string(rs.type()) << ": " << rs.num_positive() << " positive roots\n";
      for (int r = 0; r < rs.num_positive(); ++r) {
        out << std::setw(4) << r + 1 << "  height " << std::setw(2) << rs.height(r) << "  ("
            << detail::coords_text(rs, r) << ")\n";
      }
      break;
  }
  return {out.str(), 0};
}

inline CommandResult cmd_classes(const RunConfig& cfg) {
  const RootSystem rs(cfg.type);
  const auto classes = all_classes(rs, cfg.cap);
  std::ostringstream out;
  switch (cfg.format) {
    case Format::json:
      out << detail::dump(to_json(rs, classes));
      break;
    case Format::csv:
      out << "size,min_length,max_length,representative_word,involution,n_max_length_elements\n";
      for (const auto& c : classes) {
        out << c.size() << ',' << c.min_length << ',' << c.max_length << ',' << format_word(c.representative_word)
            << ',' << (c.is_involution_class ? "true" : "false") << ',' << c.max_elements.size() << '\n';
      }
      break;
    case Format::text:
      out << to_string(rs.type()) << ": " << classes.size() << " conjugacy classes\n";
      out << "  size  min  max  inv  #max  representative\n";
      for (const auto& c : classes) {
        out << std::setw(6) << c.size() << std::setw(5) << c.min_length << std::setw(5) << c.max_length
            << std::setw(5) << (c.is_involution_class ? "yes" : "no") << std::setw(6) << c.max_elements.size()
            << "  " << format_word(c.representative_word) << '\n';
      }
      break;
  }
  return {out.str(), 0};
}

inline CommandResult cmd_wm(const RunConfig& cfg) {
  const RootSystem rs(cfg.type);
  const WmLattice lattice = wm_classes(rs, cfg.cap);
  std::ostringstream out;
  switch (cfg.format) {
    case Format::json:
      out << detail::dump(to_json(rs, lattice));
      break;
    case Format::csv:
      out << "sigma,max_element_word,max_length,rank_defect,fixed_dim,predicted_dimension,class_size\n";
      for (const auto& e : lattice.entries) {
        out << '"' << to_string(e.sigma) << "\"," << format_word(e.max_word) << ',' << e.max_length << ','
            << e.rank_defect << ',' << e.fixed_dim << ',' << e.predicted_dimension << ',' << e.class_ref.size()
            << '\n';
      }
      break;
    case Format::text:
      out << to_string(rs.type()) << ": " << lattice.entries.size()
          << " classes with a unique element of maximal length\n";
      out << "  sigma            rk(1-w)  dim E1  l+rk  size  max element\n";
      for (const auto& e : lattice.entries) {
        out << "  " << std::left << std::setw(16) << to_string(e.sigma) << std::right << std::setw(8)
            << e.rank_defect << std::setw(8) << e.fixed_dim << std::setw(6) << e.predicted_dimension << std::setw(6)
            << e.class_ref.size() << "  " << format_word(e.max_word) << '\n';
      }
      break;
  }
  return {out.str(), 0};
}

/// "u < v", "u > v", "u = v" or "incomparable".
inline std::string bruhat_verdict(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  if (u == v) return "u = v";
  BruhatOrder order(rs);
  if (order.leq(u, v)) return "u < v";
  if (order.leq(v, u)) return "u > v";
  return "incomparable";
}

inline CommandResult cmd_bruhat(const RunConfig& cfg, std::string_view u_word, std::string_view v_word) {
  const RootSystem rs(cfg.type);
  const WeylElement u = from_word(rs, parse_word(u_word, rs.rank()));
  const WeylElement v = from_word(rs, parse_word(v_word, rs.rank()));
  const std::string verdict = bruhat_verdict(rs, u, v);
  std::ostringstream out;
  const std::string ur = format_word(reduced_word(rs, u));
  const std::string vr = format_word(reduced_word(rs, v));
  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["type"] = to_string(rs.type());
      j["rank"] = rs.rank();
      j["u"] = ur;
      j["v"] = vr;
      j["verdict"] = verdict;
      out << detail::dump(j);
      break;
    }
    case Format::csv:
      out << "u,v,verdict\n" << ur << ',' << vr << ',' << verdict << '\n';
      break;
    case Format::text:
      out << verdict << '\n';
      break;
  }
  return {out.str(), 0};
}

/// Runs one named suite. The class list is computed once by the caller.
inline Report run_suite(const RootSystem& rs, const std::string& suite, const std::vector<ConjClass>& classes,
                        const WmLattice& lattice, int jobs) {
  if (suite == "theorem-max") return theorem_max_check(rs, classes, jobs).report;
  if (suite == "normal-form") return normal_form_check(rs, lattice);
  if (suite == "rank-lemma") return rank_lemma_suite(rs);
  if (suite == "psi-argmax") return psi_rank_maximization_check(rs, lattice);
  if (suite == "gkp") return gkp_suite(rs, classes, jobs);
  if (suite == "chain-step") return chain_step_property_check(rs, involutions_of(classes), jobs);
  if (suite == "lattice") return lattice_check(rs, lattice);
  if (suite == "monotonicity") {
    std::vector<WeylElement> group;
    for (const auto& c : classes) group.insert(group.end(), c.elements.begin(), c.elements.end());
    return dimension_monotonicity_check(BruhatIdealTable(rs, group));
  }
  if (suite == "oracle") return oracle_differential_check(rs);
  throw ParseError("unknown suite '" + suite + "'", suite);
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
  const RootSystem rs(cfg.type);
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = {"theorem-max", "normal-form", "rank-lemma", "psi-argmax", "gkp", "chain-step", "lattice"};
    if (classical_order(cfg.type) <= BruhatIdealTable::kMaxElements) suites.push_back("monotonicity");
    if (cfg.with_oracle) suites.push_back("oracle");
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
      throw ParseError("unknown suite '" + cfg.suite + "'", cfg.suite);
    }
    suites = {cfg.suite};
  }

  const auto classes = all_classes(rs, cfg.cap);
  const WmLattice lattice = wm_classes(rs, classes);
  std::vector<Report> reports;
  for (const auto& s : suites) reports.push_back(run_suite(rs, s, classes, lattice, cfg.jobs));

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  std::ostringstream out;
  switch (cfg.format) {
    case Format::json: {
      if (reports.size() == 1) {
        out << detail::dump(to_json(reports.front()));
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << detail::dump(arr);
      }
      break;
    }
    case Format::csv:
      out << "type,suite,n_checked,n_passed,status\n";
      for (const auto& r : reports) {
        out << to_string(r.type) << ',' << r.suite << ',' << r.n_checked << ',' << r.n_passed << ','
            << detail::status(r) << '\n';
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        out << std::left << std::setw(14) << r.suite << std::right << std::setw(4) << to_string(r.type)
            << std::setw(12) << r.n_passed << '/' << std::left << std::setw(10) << r.n_checked << std::right
            << detail::status(r) << '\n';
        for (const auto& c : r.counterexamples) {
          out << "    counterexample: " << c.check;
          for (const auto& w : c.words) out << " [" << w << ']';
          out << '\n';
        }
      }
      break;
  }
  return {out.str(), ok ? 0 : 1};
}

}  // namespace weylm::cli
