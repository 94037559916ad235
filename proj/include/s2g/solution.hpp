// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "s2g/property_graph.hpp"
#include "s2g/rdf.hpp"

namespace s2g {

struct Unbound {
  friend bool operator==(Unbound, Unbound) { return true; }
  friend auto operator<=>(Unbound, Unbound) = default;
};

/// One result cell. The reference evaluator yields RDF terms, the traversal
/// engine graph elements and property values.
using Cell = std::variant<Unbound, RdfTerm, PropertyValue, ElementRef>;

using Row = std::vector<Cell>;

/// Bag of solution rows over named columns. Row order is the order the
/// producing engine emitted them in.
struct SolutionMultiset {
  std::vector<std::string> columns;
  std::vector<Row> rows;

  std::size_t size() const { return rows.size(); }
};

/// Total order on cells used for multiset comparison (not query ORDER BY).
bool cell_less(const Cell& a, const Cell& b);

/// Same columns and same rows with the same multiplicities.
bool multiset_equal(const SolutionMultiset& a, const SolutionMultiset& b);

/// Same columns and identical row sequence.
bool sequence_equal(const SolutionMultiset& a, const SolutionMultiset& b);

/// Every row of `part` occurs in `whole` at least as often.
bool sub_multiset(const SolutionMultiset& part, const SolutionMultiset& whole);

/// Text of a cell as written to TSV: `<iri>`, the string, the numeral,
/// `v[id]` / `e[id]`, or empty for UNBOUND.
std::string cell_text(const Cell& cell);

/// Header line of column names, one line per row, UNBOUND as an empty
/// field. Tabs, newlines and backslashes inside values are escaped.
std::string to_tsv(const SolutionMultiset& rows);

}  // namespace s2g
