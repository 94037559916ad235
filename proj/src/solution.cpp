// SPDX-License-Identifier: Apache-2.0

#include "s2g/solution.hpp"

#include <algorithm>

#include "s2g/number.hpp"

namespace s2g {

bool cell_less(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Unbound>) {
          return false;
        } else {
          return x < y;
        }
      },
      a);
}

namespace {

bool row_less(const Row& a, const Row& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      cell_less);
}

std::vector<Row> sorted_rows(const SolutionMultiset& s) {
  std::vector<Row> rows = s.rows;
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::string escape_field(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

bool multiset_equal(const SolutionMultiset& a, const SolutionMultiset& b) {
  if (a.columns != b.columns || a.rows.size() != b.rows.size()) return false;
  return sorted_rows(a) == sorted_rows(b);
}

bool sequence_equal(const SolutionMultiset& a, const SolutionMultiset& b) {
  return a.columns == b.columns && a.rows == b.rows;
}

bool sub_multiset(const SolutionMultiset& part, const SolutionMultiset& whole) {
  if (part.columns != whole.columns) return false;
  std::vector<Row> p = sorted_rows(part);
  std::vector<Row> w = sorted_rows(whole);
  return std::includes(w.begin(), w.end(), p.begin(), p.end(), row_less);
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Unbound>) {
          return {};
        } else if constexpr (std::is_same_v<T, RdfTerm>) {
          if (x.is_iri()) return "<" + x.lexical() + ">";
          if (x.kind() == TermKind::Number) return canonical_number(x.numeric_value());
          return x.lexical();
        } else if constexpr (std::is_same_v<T, PropertyValue>) {
          return x.text();
        } else {
          return (x.kind == ElementKind::Vertex ? "v[" : "e[") +
                 std::to_string(x.id) + "]";
        }
      },
      cell);
}

std::string to_tsv(const SolutionMultiset& rows) {
  std::string out;
  for (std::size_t k = 0; k < rows.columns.size(); ++k) {
    if (k > 0) out += '\t';
    out += escape_field(rows.columns[k]);
  }
  out += '\n';
  for (const auto& row : rows.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += '\t';
      out += escape_field(cell_text(row[k]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace s2g
