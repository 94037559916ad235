// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "s2g/error.hpp"

namespace s2g {

enum class TermKind { Iri, String, Number };

/// An IRI, a plain string literal or a numeric literal. Blank nodes are not
/// modelled.
class RdfTerm {
 public:
  static RdfTerm iri(std::string text);
  static RdfTerm string(std::string text);
  /// Numeric literal from its lexical form; throws ParseError if the text is
  /// not a numeral.
  static RdfTerm number(std::string lexical);
  static RdfTerm number(double value);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_literal() const { return kind_ != TermKind::Iri; }
  const std::string& lexical() const { return lexical_; }
  double numeric_value() const { return value_; }

  /// N-Triples form: `<iri>`, `"escaped"`, or the bare numeral.
  std::string to_ntriples() const;

  // Numbers compare by value, so 29 and 29.0 denote the same term.
  friend bool operator==(const RdfTerm& a, const RdfTerm& b);
  friend std::strong_ordering operator<=>(const RdfTerm& a, const RdfTerm& b);

 private:
  RdfTerm(TermKind kind, std::string lexical, double value)
      : kind_(kind), lexical_(std::move(lexical)), value_(value) {}

  TermKind kind_ = TermKind::Iri;
  std::string lexical_;
  double value_ = 0.0;
};

struct Triple {
  RdfTerm subject;
  RdfTerm predicate;
  RdfTerm object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A set of triples whose subjects and predicates are IRIs.
class RdfGraph {
 public:
  /// Returns false when the triple was already present. Throws
  /// ClassificationError when subject or predicate is not an IRI.
  bool add(Triple triple);

  const std::set<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

 private:
  std::set<Triple> triples_;
};

/// Parses the supported N-Triples subset. Objects may be IRIs, quoted
/// strings (optionally typed with an xsd numeric or string datatype) or
/// bare numerals.
RdfGraph load_ntriples(std::string_view text);

/// One triple per line in set order; inverse of load_ntriples.
std::string serialize_ntriples(const RdfGraph& graph);

/// Escapes `"`, `\`, and control characters for a quoted literal body.
std::string escape_string_literal(std::string_view text);

/// Substring after the last '/' or '#'; the whole text when neither occurs.
std::string_view local_name(std::string_view iri);

}  // namespace s2g
