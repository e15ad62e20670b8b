#pragma once

// Classes with a unique element of maximal length, and the checks built on them.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylm/bruhat.hpp"
#include "weylm/conjugacy.hpp"
#include "weylm/detail/parallel.hpp"
#include "weylm/report.hpp"
#include "weylm/weyl.hpp"

namespace weylm {

/// A class with a unique maximal-length element, with that element's invariants.
struct WmEntry {
  ConjClass class_ref;
  WeylElement max_element;
  Word max_word;
  SimpleSubset sigma;  ///< max_element = w0 * w_sigma
  int max_length = 0;
  int rank_defect = 0;  ///< rk(1 - max_element)
  int fixed_dim = 0;    ///< dim E_1(max_element)
  int predicted_dimension = 0;
};

struct WmLattice {
  CartanType type{};
  std::vector<WmEntry> entries;
  /// The sigma subsets of the entries, largest first (reverse inclusion order).
  std::vector<SimpleSubset> jsets;
};

namespace detail {

inline std::string word_of(const RootSystem& rs, const WeylElement& w) { return format_word(reduced_word(rs, w)); }

/// Does w_sigma act as w0 on every simple root in sigma?
inline bool agrees_with_w0_on(const RootSystem& rs, const WeylElement& w_sigma, SimpleSubset sigma) {
  const WeylElement w0 = longest_element(rs);
  for (int i : sigma.indices()) {
    if (w_sigma.image(i) != w0.image(i)) return false;
  }
  return true;
}

inline bool minus_w0_preserves(const RootSystem& rs, SimpleSubset sigma) {
  const auto perm = minus_w0_on_simples(rs);
  SimpleSubset image;
  for (int i : sigma.indices()) image.insert(perm[i]);
  return image == sigma;
}

}  // namespace detail

/// Sigma with w = w0 w_sigma and w_sigma = w0 on sigma, when w has that form.
/// Such a sigma is unique: it is the support of w0 w.
inline std::optional<SimpleSubset> richardson_decomposition(const RootSystem& rs, const WeylElement& w) {
  if (!is_involution(rs, w)) return std::nullopt;
  const WeylElement w0 = longest_element(rs);
  const WeylElement x = multiply(rs, w0, w);
  const SimpleSubset sigma = support(rs, x);
  if (x != parabolic_longest(rs, sigma)) return std::nullopt;
  if (!detail::agrees_with_w0_on(rs, x, sigma)) return std::nullopt;
  return sigma;
}

/// l(w) + rk(1 - w) for the class's maximal element.
inline int predicted_dimension(const RootSystem& rs, const WmEntry& entry) {
  return length(rs, entry.max_element) + rank_one_minus(rs, entry.max_element);
}

inline WmLattice wm_classes(const RootSystem& rs, const std::vector<ConjClass>& classes) {
  WmLattice lattice;
  lattice.type = rs.type();
  const WeylElement w0 = longest_element(rs);
  for (const auto& c : classes) {
    if (c.max_elements.size() != 1) continue;
    WmEntry e;
    e.class_ref = c;
    e.max_element = c.max_elements.front();
    e.max_word = reduced_word(rs, e.max_element);
    e.sigma = support(rs, multiply(rs, w0, e.max_element));
    e.max_length = static_cast<int>(e.max_word.size());
    e.rank_defect = rank_one_minus(rs, e.max_element);
    e.fixed_dim = rs.rank() - e.rank_defect;
    e.predicted_dimension = e.max_length + e.rank_defect;
    lattice.jsets.push_back(e.sigma);
    lattice.entries.push_back(std::move(e));
  }
  std::sort(lattice.jsets.begin(), lattice.jsets.end(), [](SimpleSubset a, SimpleSubset b) {
    return a.size() != b.size() ? a.size() > b.size() : a.mask() < b.mask();
  });
  return lattice;
}

inline WmLattice wm_classes(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap) {
  return wm_classes(rs, all_classes(rs, cap));
}

struct RankIdentityResult {
  enum class Outcome { passed, failed, hypothesis_not_met };
  Outcome outcome = Outcome::hypothesis_not_met;
  SimpleSubset pi;
  int rk_w0 = 0;
  int rk_w_pi = 0;
  int rk_w = 0;  ///< rk(1 - w0 w_pi)
  bool minus_w0_preserves_pi = false;
};

/// rk(1-w0) = rk(1-w_pi) + rk(1-w0 w_pi) and (-w0)(pi) = pi, whenever w0 w_pi is an
/// involution and w_pi agrees with w0 on pi.
inline RankIdentityResult rank_identity_check(const RootSystem& rs, SimpleSubset pi) {
  RankIdentityResult r;
  r.pi = pi;
  const WeylElement w0 = longest_element(rs);
  const WeylElement w_pi = parabolic_longest(rs, pi);
  const WeylElement w = multiply(rs, w0, w_pi);
  if (!is_involution(rs, w) || !detail::agrees_with_w0_on(rs, w_pi, pi)) return r;
  r.rk_w0 = rank_one_minus(rs, w0);
  r.rk_w_pi = rank_one_minus(rs, w_pi);
  r.rk_w = rank_one_minus(rs, w);
  r.minus_w0_preserves_pi = detail::minus_w0_preserves(rs, pi);
  const bool ok = r.rk_w0 == r.rk_w_pi + r.rk_w && r.minus_w0_preserves_pi;
  r.outcome = ok ? RankIdentityResult::Outcome::passed : RankIdentityResult::Outcome::failed;
  return r;
}

/// rank_identity_check over all 2^n subsets; subsets missing the hypothesis are not counted.
inline Report rank_lemma_suite(const RootSystem& rs) {
  Report report;
  report.type = rs.type();
  report.suite = "rank-lemma";
  const std::uint32_t subsets = 1u << rs.rank();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    const auto r = rank_identity_check(rs, SimpleSubset(mask));
    if (r.outcome == RankIdentityResult::Outcome::hypothesis_not_met) continue;
    report.record(r.outcome == RankIdentityResult::Outcome::passed, "rank identity for Pi = " + to_string(r.pi),
                  {detail::word_of(rs, parabolic_longest(rs, r.pi))});
  }
  return report;
}

/// Structural checks on every entry: unique maximum, involution, normal form w0 w_sigma with
/// w_sigma = w0 on sigma, sigma = support(w0 max), and (-w0)(sigma) = sigma.
inline Report normal_form_check(const RootSystem& rs, const WmLattice& lattice) {
  Report report;
  report.type = rs.type();
  report.suite = "normal-form";
  const WeylElement w0 = longest_element(rs);
  for (const auto& e : lattice.entries) {
    const std::vector<std::string> words{format_word(e.max_word)};
    report.record(e.class_ref.max_elements.size() == 1, "unique maximal-length element", words);
    report.record(is_involution(rs, e.max_element), "maximal element is an involution", words);
    const auto sigma = richardson_decomposition(rs, e.max_element);
    report.record(sigma.has_value() && *sigma == e.sigma, "normal form w0 w_sigma with w_sigma = w0 on sigma", words);
    report.record(e.sigma == support(rs, multiply(rs, w0, e.max_element)), "sigma = support(w0 max)", words);
    report.record(detail::minus_w0_preserves(rs, e.sigma), "(-w0)(sigma) = sigma", words);
  }
  return report;
}

/// For each pair of entries with z <= w in Bruhat order: sigma(w) within sigma(z),
/// rk(1-z) <= rk(1-w) and d(w) <= d(z).
inline Report psi_rank_maximization_check(const RootSystem& rs, const WmLattice& lattice, const BruhatOrder& order) {
  Report report;
  report.type = rs.type();
  report.suite = "psi-argmax";
  for (const auto& z : lattice.entries) {
    for (const auto& w : lattice.entries) {
      if (!order.leq(z.max_element, w.max_element)) continue;
      const bool ok = w.sigma.is_subset_of(z.sigma) && z.rank_defect <= w.rank_defect && w.fixed_dim <= z.fixed_dim;
      report.record(ok, "rank maximisation for z <= w", {format_word(z.max_word), format_word(w.max_word)});
    }
  }
  return report;
}

inline Report psi_rank_maximization_check(const RootSystem& rs, const WmLattice& lattice) {
  BruhatOrder order(rs);
  return psi_rank_maximization_check(rs, lattice, order);
}

/// Every pair of entries has a least upper bound and a greatest lower bound among the entries,
/// for the Bruhat order on maximal elements.
inline Report lattice_bounds_check(const RootSystem& rs, const WmLattice& lattice, const BruhatOrder& order) {
  Report report;
  report.type = rs.type();
  report.suite = "lattice";
  const std::size_t n = lattice.entries.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      leq[a][b] = order.leq(lattice.entries[a].max_element, lattice.entries[b].max_element);
    }
  }
  // Extreme element of `candidates` w.r.t. `below`; exists iff unique.
  auto extreme = [&](const std::vector<std::size_t>& candidates, bool least) {
    std::size_t found = 0;
    for (std::size_t c : candidates) {
      bool all = true;
      for (std::size_t d : candidates) all = all && (least ? leq[c][d] : leq[d][c]);
      if (all) ++found;
    }
    return found == 1;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> upper;
      std::vector<std::size_t> lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a][c] && leq[b][c]) upper.push_back(c);
        if (leq[c][a] && leq[c][b]) lower.push_back(c);
      }
      const std::vector<std::string> words{format_word(lattice.entries[a].max_word),
                                           format_word(lattice.entries[b].max_word)};
      report.record(extreme(upper, true), "join exists", words);
      report.record(extreme(lower, false), "meet exists", words);
    }
  }
  return report;
}

/// Closure of the sigma family under union and intersection, presence of {} and the full set,
/// and J >= K  <=>  w0 w_J <= w0 w_K.
inline Report lattice_check(const RootSystem& rs, const WmLattice& lattice, const BruhatOrder& order) {
  Report report;
  report.type = rs.type();
  report.suite = "lattice";
  std::unordered_map<std::uint32_t, const WmEntry*> by_sigma;
  for (const auto& e : lattice.entries) by_sigma.emplace(e.sigma.mask(), &e);
  report.record(by_sigma.size() == lattice.entries.size(), "sigma determines the entry");
  auto member = [&](SimpleSubset s) { return by_sigma.contains(s.mask()); };
  report.record(member(SimpleSubset{}), "empty set in J");
  report.record(member(SimpleSubset::full(rs.rank())), "full set in J");
  for (const auto& j : lattice.entries) {
    for (const auto& k : lattice.entries) {
      const std::vector<std::string> words{format_word(j.max_word), format_word(k.max_word)};
      report.record(member(j.sigma | k.sigma), "union " + to_string(j.sigma) + " | " + to_string(k.sigma), words);
      report.record(member(j.sigma & k.sigma), "intersection " + to_string(j.sigma) + " & " + to_string(k.sigma), words);
      const bool contains = k.sigma.is_subset_of(j.sigma);
      report.record(contains == order.leq(j.max_element, k.max_element),
                    "reverse inclusion matches Bruhat order for " + to_string(j.sigma) + ", " + to_string(k.sigma),
                    words);
    }
  }
  const auto bounds = lattice_bounds_check(rs, lattice, order);
  report.merge(bounds);
  return report;
}

inline Report lattice_check(const RootSystem& rs, const WmLattice& lattice) {
  BruhatOrder order(rs);
  return lattice_check(rs, lattice, order);
}

struct ClassOutcome {
  Word representative_word;
  std::size_t size = 0;
  std::size_t n_max_length = 0;
  std::optional<Word> bruhat_max_word;
  bool agrees = false;
};

struct TheoremMaxResult {
  Report report;
  std::vector<ClassOutcome> outcomes;  ///< parallel to the input classes
};

/// Per class: a Bruhat maximum exists iff the maximal-length stratum is a singleton, and then
/// it is that element.
inline TheoremMaxResult theorem_max_check(const RootSystem& rs, const std::vector<ConjClass>& classes, int jobs = 1) {
  auto shards = detail::run_sharded(classes.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    BruhatOrder order(rs);
    TheoremMaxResult part;
    for (std::size_t k = begin; k < end; ++k) {
      const ConjClass& c = classes[k];
      ClassOutcome out;
      out.representative_word = c.representative_word;
      out.size = c.size();
      out.n_max_length = c.max_elements.size();
      const auto maximum = bruhat_maximum(order, c.elements);
      if (maximum) out.bruhat_max_word = reduced_word(rs, *maximum);
      const bool unique = c.max_elements.size() == 1;
      out.agrees = maximum.has_value() == unique && (!maximum || *maximum == c.max_elements.front());
      std::vector<std::string> words{format_word(c.representative_word)};
      for (const auto& m : c.max_elements) words.push_back(detail::word_of(rs, m));
      part.report.record(out.agrees, "unique maximal length <=> Bruhat maximum", std::move(words));
      part.outcomes.push_back(std::move(out));
    }
    return part;
  });
  TheoremMaxResult result;
  result.report.type = rs.type();
  result.report.suite = "theorem-max";
  for (auto& s : shards) {
    result.report.merge(s.report);
    for (auto& o : s.outcomes) result.outcomes.push_back(std::move(o));
  }
  return result;
}

/// sigma_0 maximal in its class, sigma_j = s_{i_j} sigma_{j-1} s_{i_j}, lengths non-increasing.
struct DescentChain {
  std::vector<int> generators;        ///< i_1 .. i_r (0-based)
  std::vector<WeylElement> elements;  ///< sigma_0 .. sigma_r

  const WeylElement& start() const { return elements.front(); }
  const WeylElement& end() const { return elements.back(); }
};

namespace detail {

/// Breadth-first search from the maximal-length elements of c along conjugations by simple
/// reflections that do not increase length; smallest generator first.
class DescentForest {
 public:
  DescentForest(const RootSystem& rs, const ConjClass& c) {
    std::unordered_map<WeylElement, int> lengths;
    for (std::size_t k = 0; k < c.elements.size(); ++k) lengths.emplace(c.elements[k], c.lengths[k]);
    std::deque<WeylElement> queue;
    for (const auto& m : c.max_elements) {
      parent_.emplace(m, std::make_pair(m, -1));
      queue.push_back(m);
    }
    while (!queue.empty()) {
      const WeylElement x = queue.front();
      queue.pop_front();
      const int lx = lengths.at(x);
      for (int i = 0; i < rs.rank(); ++i) {
        const WeylElement y = conjugate_by_simple(rs, i, x);
        if (y == x || lengths.at(y) > lx || parent_.contains(y)) continue;
        parent_.emplace(y, std::make_pair(x, i));
        queue.push_back(y);
      }
    }
  }

  bool reaches(const WeylElement& w) const { return parent_.contains(w); }

  DescentChain chain_to(const WeylElement& w) const {
    DescentChain chain;
    WeylElement cur = w;
    for (;;) {
      const auto& [prev, gen] = parent_.at(cur);
      chain.elements.push_back(cur);
      if (gen < 0) break;
      chain.generators.push_back(gen);
      cur = prev;
    }
    std::reverse(chain.elements.begin(), chain.elements.end());
    std::reverse(chain.generators.begin(), chain.generators.end());
    return chain;
  }

 private:
  std::unordered_map<WeylElement, std::pair<WeylElement, int>> parent_;
};

}  // namespace detail

inline DescentChain gkp_descent_chain(const RootSystem& rs, const ConjClass& c, const WeylElement& w) {
  if (!c.contains(w)) throw Error("gkp_descent_chain: element is not in the class");
  detail::DescentForest forest(rs, c);
  if (!forest.reaches(w)) {
    throw ChainNotFound("no non-increasing conjugation chain reaches " + detail::word_of(rs, w));
  }
  return forest.chain_to(w);
}

/// Re-checks a chain against its contract with freshly computed lengths.
inline bool validate_descent_chain(const RootSystem& rs, const ConjClass& c, const WeylElement& w,
                                   const DescentChain& chain) {
  if (chain.elements.empty() || chain.elements.size() != chain.generators.size() + 1) return false;
  if (!c.contains(chain.start()) || length(rs, chain.start()) != c.max_length) return false;
  if (chain.end() != w) return false;
  int prev = length(rs, chain.start());
  for (std::size_t j = 0; j < chain.generators.size(); ++j) {
    const int gen = chain.generators[j];
    if (gen < 0 || gen >= rs.rank()) return false;
    if (chain.elements[j + 1] != conjugate_by_simple(rs, gen, chain.elements[j])) return false;
    const int l = length(rs, chain.elements[j + 1]);
    if (l > prev) return false;
    prev = l;
  }
  return true;
}

/// A descent chain for every element of every class, each validated.
inline Report gkp_suite(const RootSystem& rs, const std::vector<ConjClass>& classes, int jobs = 1) {
  auto shards = detail::run_sharded(classes.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    Report part;
    for (std::size_t k = begin; k < end; ++k) {
      const ConjClass& c = classes[k];
      detail::DescentForest forest(rs, c);
      for (const auto& w : c.elements) {
        const bool ok = forest.reaches(w) && validate_descent_chain(rs, c, w, forest.chain_to(w));
        part.record(ok, "descent chain from a maximal-length element", {detail::word_of(rs, w)});
      }
    }
    return part;
  });
  Report report;
  report.type = rs.type();
  report.suite = "gkp";
  for (const auto& s : shards) report.merge(s);
  return report;
}

/// For every involution x and simple s: l(sxs) - l(x) in {-2, 0, 2}; equality forces sxs = x;
/// a drop of 2 gives sxs <= xs <= x.
inline Report chain_step_property_check(const RootSystem& rs, const std::vector<WeylElement>& involutions,
                                        int jobs = 1) {
  auto shards = detail::run_sharded(involutions.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
    BruhatOrder order(rs);
    Report part;
    for (std::size_t k = begin; k < end; ++k) {
      const WeylElement& x = involutions[k];
      const int lx = length(rs, x);
      for (int s = 0; s < rs.rank(); ++s) {
        const WeylElement y = conjugate_by_simple(rs, s, x);
        const int d = length(rs, y) - lx;
        bool ok = d == -2 || d == 0 || d == 2;
        if (d == 0) ok = ok && y == x;
        if (d == -2) {
          const WeylElement xs = right_multiply_simple(rs, x, s);
          ok = ok && order.leq(y, xs) && order.leq(xs, x);
        }
        part.record(ok, "chain step by s" + std::to_string(s + 1), {detail::word_of(rs, x)});
      }
    }
    return part;
  });
  Report report;
  report.type = rs.type();
  report.suite = "chain-step";
  for (const auto& s : shards) report.merge(s);
  return report;
}

/// All involutions of W, from a class list.
inline std::vector<WeylElement> involutions_of(const std::vector<ConjClass>& classes) {
  std::vector<WeylElement> out;
  for (const auto& c : classes) {
    if (c.is_involution_class) out.insert(out.end(), c.elements.begin(), c.elements.end());
  }
  return out;
}

}  // namespace weylm
