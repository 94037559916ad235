// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace s2g {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool valid() const { return line != 0; }
};

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input text: N-Triples, property-graph records, SPARQL, bytecode.
class ParseError : public Error {
 public:
  ParseError(std::string message, SourcePos pos,
             std::vector<std::string> expected = {});

  const std::string& message() const { return message_; }
  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// A recognised construct that the translator deliberately does not handle
/// (REGEX, variable predicates, blank nodes, property paths, ...).
class UnsupportedFeatureError : public Error {
 public:
  UnsupportedFeatureError(std::string construct, std::string detail,
                          SourcePos pos = {});

  const std::string& construct() const { return construct_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string construct_;
  SourcePos pos_;
};

/// A predicate that carries none of the registered prefix markers, or a
/// triple that has no property-graph counterpart.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// A variable used outside the scope that binds it.
class ScopingError : public Error {
 public:
  using Error::Error;
};

/// Structural problems in a property graph (duplicate ids, dangling edges).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Runtime comparison between incompatible value kinds.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Runtime failure of a traversal that is not a type error.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Renders `file:line:col: message` (position omitted when unknown).
std::string format_diagnostic(const std::string& file, const Error& error);

}  // namespace s2g
