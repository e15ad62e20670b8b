#pragma once

// Cross-checks of the main modules against the brute-force oracle.

#include <algorithm>
#include <vector>

#include "weylm/bruhat.hpp"
#include "weylm/conjugacy.hpp"
#include "weylm/oracle.hpp"
#include "weylm/report.hpp"

namespace weylm {

/// Group order, lengths, Bruhat order (both main routes) and the class partition against the
/// oracle. Requires |W| within the oracle's relation limit.
inline Report oracle_differential_check(const RootSystem& rs, const oracle::OracleLimits& limits = {}) {
  Report report;
  report.type = rs.type();
  report.suite = "oracle";

  const oracle::BruhatRelation relation = oracle::bruhat_oracle(rs, limits);
  const oracle::CayleyEnumeration& g = relation.group();
  report.record(g.size() == classical_order(rs.type()), "Cayley graph order equals classical order");

  const auto group = enumerate_elements(rs);
  report.record(group.size() == g.size(), "enumerate_elements size matches oracle");
  for (std::size_t k = 0; k < g.size(); ++k) {
    report.record(length(rs, g.elements[k]) == g.depth[k], "length equals Cayley distance",
                  {format_word(g.words[k])});
  }

  BruhatOrder order(rs);
  const BruhatIdealTable table(rs, group);
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      const bool expected = relation.leq(u, v);
      const bool by_lifting = order.leq(g.elements[u], g.elements[v]);
      const bool by_ideal = table.leq(table.index_of(g.elements[u]), table.index_of(g.elements[v]));
      report.record(by_lifting == expected && by_ideal == expected, "Bruhat comparison matches oracle",
                    {format_word(g.words[u]), format_word(g.words[v])});
    }
  }

  auto expected_classes = oracle::classes_oracle(rs, limits);
  std::vector<std::vector<WeylElement>> main_classes;
  for (const auto& c : all_classes(rs)) {
    auto members = c.elements;
    std::sort(members.begin(), members.end());
    main_classes.push_back(std::move(members));
  }
  std::sort(main_classes.begin(), main_classes.end());
  report.record(main_classes.size() == expected_classes.size(), "number of classes matches oracle");
  for (std::size_t k = 0; k < std::min(main_classes.size(), expected_classes.size()); ++k) {
    report.record(main_classes[k] == expected_classes[k], "class matches oracle",
                  {format_word(reduced_word(rs, expected_classes[k].front()))});
  }
  return report;
}

}  // namespace weylm
