// SPDX-License-Identifier: Apache-2.0

#include "s2g/sparql_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "s2g/number.hpp"

namespace s2g::sparql {

ParseOptions parse_options_for(const PrefixRegistry& registry) {
  ParseOptions options;
  options.implicit_prefixes.clear();
  for (const auto& name : registry.implicit_prefix_names()) {
    options.implicit_prefixes.emplace(name, name + ":");
  }
  return options;
}

namespace {

constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool is_local_char(char c) {
  return is_name_char(c) || c == '.' || c == ':' || c == '%';
}

std::string upper(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : src_(text), options_(options) {
    line_starts_.push_back(0);
    for (std::size_t k = 0; k < src_.size(); ++k) {
      if (src_[k] == '\n') line_starts_.push_back(k + 1);
    }
  }

  SelectQuery parse_query() {
    SelectQuery query;
    prefixes_ = &query.prefixes;
    parse_prologue(query);
    skip_ws();
    for (const char* form : {"ASK", "CONSTRUCT", "DESCRIBE"}) {
      if (at_keyword(form)) {
        throw UnsupportedFeatureError(std::string(form) + " query form",
                                      "only SELECT is supported", here());
      }
    }
    expect_keyword("SELECT");
    skip_ws();
    if (at_keyword("DISTINCT")) {
      consume_word();
      query.distinct = true;
    } else if (at_keyword("REDUCED")) {
      throw UnsupportedFeatureError("REDUCED", "", here());
    }
    bool star = parse_projection(query);
    skip_ws();
    if (at_keyword("FROM")) {
      throw UnsupportedFeatureError("FROM", "named graphs are not supported",
                                    here());
    }
    if (at_keyword("WHERE")) consume_word();
    skip_ws();
    if (peek() != '{') fail("expected group pattern", {"'{'"});
    query.where = parse_group();
    if (star) {
      for (const auto& name : all_variables(query.where)) {
        query.projection.push_back(Variable{name});
      }
      if (query.projection.empty()) {
        throw ScopingError("SELECT * over a group without variables");
      }
    }
    parse_modifiers(query);
    skip_ws();
    if (!at_end()) fail("unexpected trailing input", {"end of query"});
    return query;
  }

 private:
  // ---- low-level scanning

  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  SourcePos pos_at(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }
  SourcePos here() const { return pos_at(i_); }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) const {
    throw ParseError(message, here(), std::move(expected));
  }

  void skip_ws() {
    while (!at_end()) {
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i_;
      } else if (c == '#') {
        while (!at_end() && src_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  std::string_view word_at() const {
    if (!is_name_start(peek())) return {};
    std::size_t j = i_;
    while (j < src_.size() && is_name_char(src_[j])) ++j;
    return src_.substr(i_, j - i_);
  }

  // Keywords that may follow a triple pattern without a separating '.'.
  bool at_group_keyword() {
    for (const char* k : {"FILTER", "OPTIONAL", "MINUS", "BIND", "VALUES", "GRAPH", "SERVICE"}) {
      if (at_keyword(k)) return true;
    }
    return false;
  }

  bool at_keyword(std::string_view keyword) const {
    std::string_view w = word_at();
    if (w.empty() || peek(w.size()) == ':') {
      return false;
    }
    return upper(w) == keyword;
  }

  std::string_view consume_word() {
    std::string_view w = word_at();
    i_ += w.size();
    return w;
  }

  void expect_keyword(std::string_view keyword) {
    skip_ws();
    if (!at_keyword(keyword)) fail("expected " + std::string(keyword), {std::string(keyword)});
    consume_word();
  }

  void expect_char(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'", {std::string("'") + c + "'"});
    ++i_;
  }

  // ---- prologue and projection

  void parse_prologue(SelectQuery& query) {
    while (true) {
      skip_ws();
      if (at_keyword("BASE")) {
        throw UnsupportedFeatureError("BASE", "relative IRIs are not supported",
                                      here());
      }
      if (!at_keyword("PREFIX")) return;
      consume_word();
      skip_ws();
      std::string name(word_at());
      i_ += name.size();
      if (peek() != ':') fail("expected prefix name", {"PNAME_NS"});
      ++i_;
      skip_ws();
      if (peek() != '<') fail("expected IRI", {"IRIREF"});
      query.prefixes[name] = read_iri_ref();
    }
  }

  bool parse_projection(SelectQuery& query) {
    skip_ws();
    if (peek() == '*') {
      ++i_;
      return true;
    }
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '?' || c == '$') {
        query.projection.push_back(read_variable());
      } else if (c == '(') {
        query.projection.push_back(parse_aggregate());
      } else {
        break;
      }
    }
    if (query.projection.empty()) {
      fail("expected projection", {"variable", "'('", "'*'"});
    }
    return false;
  }

  ProjectionItem parse_aggregate() {
    SourcePos at = here();
    expect_char('(');
    skip_ws();
    std::string_view name = word_at();
    if (name.empty()) {
      throw UnsupportedFeatureError("projection expression",
                                    "only (COUNT(...) AS ?v) is supported", at);
    }
    if (upper(name) != "COUNT") {
      throw UnsupportedFeatureError(upper(name) + " aggregate",
                                    "only COUNT is supported", at);
    }
    consume_word();
    expect_char('(');
    CountAggregate count;
    skip_ws();
    if (at_keyword("DISTINCT")) {
      consume_word();
      count.distinct = true;
      skip_ws();
    }
    if (peek() == '*') {
      throw UnsupportedFeatureError("COUNT(*)", "count a variable instead", here());
    }
    count.argument = read_variable();
    expect_char(')');
    expect_keyword("AS");
    skip_ws();
    count.alias = read_variable();
    expect_char(')');
    return count;
  }

  // ---- group patterns

  GroupPattern parse_group() {
    expect_char('{');
    GroupPattern group;
    skip_ws();
    if (at_keyword("SELECT")) {
      throw UnsupportedFeatureError("subquery", "", here());
    }
    while (true) {
      skip_ws();
      char c = peek();
      if (at_end()) fail("unterminated group", {"'}'"});
      if (c == '}') {
        ++i_;
        break;
      }
      if (c == '.') {
        ++i_;
        continue;
      }
      if (c == '{') {
        SourcePos at = here();
        UnionPattern u;
        u.branches.push_back(parse_group());
        skip_ws();
        if (!at_keyword("UNION")) {
          throw UnsupportedFeatureError("nested group",
                                        "a group must be a UNION branch", at);
        }
        while (at_keyword("UNION")) {
          consume_word();
          skip_ws();
          u.branches.push_back(parse_group());
          skip_ws();
        }
        group.unions.push_back(std::move(u));
        continue;
      }
      if (at_keyword("FILTER")) {
        consume_word();
        group.filters.push_back(parse_filter());
        continue;
      }
      if (at_keyword("OPTIONAL")) {
        consume_word();
        skip_ws();
        group.optionals.push_back(parse_group());
        continue;
      }
      for (const char* kw : {"MINUS", "GRAPH", "BIND", "VALUES", "SERVICE"}) {
        if (at_keyword(kw)) throw UnsupportedFeatureError(kw, "", here());
      }
      if (at_keyword("UNION")) fail("UNION without a preceding group", {"'{'"});
      parse_triples_block(group.patterns);
    }
    return group;
  }

  void parse_triples_block(std::vector<TriplePattern>& out) {
    SourcePos at = here();
    Node subject = read_node("subject");
    if (!is_variable(subject) && !std::get<RdfTerm>(subject).is_iri()) {
      throw ParseError("literal in subject position", at,
                       {"variable", "IRI"});
    }
    while (true) {
      skip_ws();
      SourcePos pat = here();
      RdfTerm predicate = read_predicate();
      while (true) {
        Node object = read_node("object");
        out.push_back(TriplePattern{subject, predicate, std::move(object), pat});
        skip_ws();
        if (peek() != ',') break;
        ++i_;
      }
      skip_ws();
      if (peek() != ';') break;
      while (peek() == ';') {
        ++i_;
        skip_ws();
      }
      // trailing ';' before '.' or '}'
      if (peek() == '.' || peek() == '}') break;
    }
    skip_ws();
    if (peek() == '.') {
      ++i_;
    } else if (peek() != '}' && peek() != '{' && !at_group_keyword()) {
      fail("expected '.' after triple pattern", {"'.'", "';'", "','", "'}'"});
    }
  }

  RdfTerm read_predicate() {
    skip_ws();
    SourcePos at = here();
    char c = peek();
    if (c == '?' || c == '$') {
      throw UnsupportedFeatureError(
          "variable predicate",
          "predicates must be constant IRIs, found " + read_variable_text(), at);
    }
    if (c == '^' || c == '!' || c == '(') {
      throw UnsupportedFeatureError("property path", std::string("'") + c + "'",
                                    at);
    }
    RdfTerm predicate = RdfTerm::iri("");
    if (c == 'a' && !is_local_char(peek(1)) ) {
      ++i_;
      predicate = RdfTerm::iri(std::string(kRdfType));
    } else if (c == '<') {
      predicate = RdfTerm::iri(read_iri_ref());
    } else if (is_name_start(c) || c == ':') {
      predicate = RdfTerm::iri(read_prefixed_name());
    } else if (c == '_' || c == '[') {
      throw UnsupportedFeatureError("blank node", "in predicate position", at);
    } else {
      fail("expected predicate", {"IRI", "prefixed name", "'a'"});
    }
    char next = peek();
    if (next == '*' || next == '+' ||
        (next == '?' && !is_name_char(peek(1)))) {
      throw UnsupportedFeatureError("property path",
                                    std::string("'") + next + "'", here());
    }
    skip_ws();
    next = peek();
    if (next == '/' || next == '|') {
      throw UnsupportedFeatureError("property path",
                                    std::string("'") + next + "'", here());
    }
    return predicate;
  }

  Node read_node(const char* role) {
    skip_ws();
    SourcePos at = here();
    char c = peek();
    if (c == '?' || c == '$') return read_variable();
    if (c == '<') return RdfTerm::iri(read_iri_ref());
    if (c == '"' || c == '\'') return read_literal();
    if (c == '_' && peek(1) == ':') {
      throw UnsupportedFeatureError("blank node", std::string("in ") + role + " position", at);
    }
    if (c == '[') {
      throw UnsupportedFeatureError("blank node", "anonymous '[]' syntax", at);
    }
    if (c == '(') {
      throw UnsupportedFeatureError("RDF collection", "", at);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return read_number();
    }
    if (is_name_start(c) || c == ':') {
      std::string_view w = word_at();
      bool pname = c == ':' || peek(w.size()) == ':';
      if (!pname) {
        std::string kw = upper(w);
        if (kw == "TRUE" || kw == "FALSE") {
          throw UnsupportedFeatureError("boolean literal", "", at);
        }
        fail("unexpected '" + std::string(w) + "'",
             {"variable", "IRI", "literal"});
      }
      return RdfTerm::iri(read_prefixed_name());
    }
    if (at_end()) fail("unexpected end of query", {"variable", "IRI", "literal"});
    fail(std::string("unexpected character '") + c + "'",
         {"variable", "IRI", "literal"});
  }

  Variable read_variable() { return Variable{read_variable_text()}; }

  std::string read_variable_text() {
    skip_ws();
    if (peek() != '?' && peek() != '$') fail("expected variable", {"variable"});
    ++i_;
    std::size_t start = i_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
                         src_[i_] == '_')) {
      ++i_;
    }
    if (i_ == start) fail("empty variable name", {"variable name"});
    return std::string(src_.substr(start, i_ - start));
  }

  std::string read_iri_ref() {
    ++i_;  // '<'
    std::size_t start = i_;
    while (!at_end() && src_[i_] != '>') {
      char c = src_[i_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '<' || c == '"' ||
          c == '{' || c == '}') {
        fail("invalid character in IRI", {"'>'"});
      }
      ++i_;
    }
    if (at_end()) fail("unterminated IRI", {"'>'"});
    std::string iri(src_.substr(start, i_ - start));
    ++i_;
    if (iri.empty()) fail("empty IRI");
    return iri;
  }

  std::string read_prefixed_name() {
    SourcePos at = here();
    std::string prefix(word_at());
    i_ += prefix.size();
    if (peek() != ':') fail("expected ':' in prefixed name", {"':'"});
    ++i_;
    std::size_t start = i_;
    while (!at_end() && is_local_char(src_[i_])) ++i_;
    while (i_ > start && src_[i_ - 1] == '.') --i_;
    std::string local(src_.substr(start, i_ - start));
    std::string base;
    if (auto it = prefixes_->find(prefix); it != prefixes_->end()) {
      base = it->second;
    } else if (auto imp = options_.implicit_prefixes.find(prefix);
               imp != options_.implicit_prefixes.end()) {
      base = imp->second;
    } else {
      throw ParseError("undeclared prefix '" + prefix + ":'", at);
    }
    return base + local;
  }

  RdfTerm read_literal() {
    char quote = src_[i_++];
    std::string body;
    while (true) {
      if (at_end() || src_[i_] == '\n') fail("unterminated string literal", {std::string(1, quote)});
      char c = src_[i_++];
      if (c == quote) break;
      if (c != '\\') {
        body += c;
        continue;
      }
      char e = peek();
      ++i_;
      switch (e) {
        case 't': body += '\t'; break;
        case 'n': body += '\n'; break;
        case 'r': body += '\r'; break;
        case 'b': body += '\b'; break;
        case 'f': body += '\f'; break;
        case '"': body += '"'; break;
        case '\'': body += '\''; break;
        case '\\': body += '\\'; break;
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    if (peek() == '@') {
      throw UnsupportedFeatureError("language tag", "", here());
    }
    if (peek() == '^' && peek(1) == '^') {
      i_ += 2;
      SourcePos at = here();
      std::string datatype;
      if (peek() == '<') {
        datatype = read_iri_ref();
      } else {
        datatype = read_prefixed_name();
      }
      std::string_view dt(datatype);
      if (dt.starts_with(kXsd)) dt.remove_prefix(kXsd.size());
      else if (dt.starts_with("xsd:")) dt.remove_prefix(4);
      else throw UnsupportedFeatureError("datatype", datatype, at);
      if (dt == "string") return RdfTerm::string(body);
      if (dt == "integer" || dt == "int" || dt == "long" || dt == "decimal" ||
          dt == "double" || dt == "float") {
        if (!is_numeral(body)) {
          throw ParseError("literal \"" + body + "\" is not a numeral", at);
        }
        return RdfTerm::number(body);
      }
      throw UnsupportedFeatureError("datatype", datatype, at);
    }
    return RdfTerm::string(std::move(body));
  }

  RdfTerm read_number() {
    SourcePos at = here();
    std::size_t start = i_;
    if (peek() == '+' || peek() == '-') ++i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    }
    if (peek() == 'e' || peek() == 'E') {
      throw UnsupportedFeatureError("exponent notation", "", at);
    }
    std::string text(src_.substr(start, i_ - start));
    if (!is_numeral(text)) throw ParseError("malformed number '" + text + "'", at);
    return RdfTerm::number(text);
  }

  // ---- filters

  FilterExpr parse_filter() {
    skip_ws();
    SourcePos at = here();
    if (peek() != '(') {
      std::string_view w = word_at();
      if (!w.empty()) check_function(w, at);
      fail("expected '(' after FILTER", {"'('"});
    }
    ++i_;
    FilterExpr f = parse_or();
    expect_char(')');
    return f;
  }

  [[noreturn]] void check_function(std::string_view name, SourcePos at) {
    std::string kw = upper(name);
    if (kw == "REGEX") {
      throw UnsupportedFeatureError("REGEX",
                                    "regular expression matching is not supported",
                                    at);
    }
    throw UnsupportedFeatureError("function call", kw, at);
  }

  FilterExpr parse_or() {
    FilterExpr left = parse_and();
    while (true) {
      skip_ws();
      if (peek() == '|' && peek(1) == '|') {
        i_ += 2;
        left = FilterExpr::disjunction(std::move(left), parse_and());
      } else {
        return left;
      }
    }
  }

  FilterExpr parse_and() {
    FilterExpr left = parse_primary();
    while (true) {
      skip_ws();
      if (peek() == '&' && peek(1) == '&') {
        i_ += 2;
        left = FilterExpr::conjunction(std::move(left), parse_primary());
      } else {
        return left;
      }
    }
  }

  FilterExpr parse_primary() {
    skip_ws();
    SourcePos at = here();
    char c = peek();
    if (c == '(') {
      ++i_;
      FilterExpr inner = parse_or();
      expect_char(')');
      return inner;
    }
    if (c == '!') {
      throw UnsupportedFeatureError("negation", "'!' in FILTER", at);
    }
    std::string_view w = word_at();
    if (!w.empty() && peek(w.size()) != ':') {
      std::size_t save = i_;
      i_ += w.size();
      skip_ws();
      if (peek() == '(') check_function(w, at);
      i_ = save;
      std::string kw = upper(w);
      if (kw == "TRUE" || kw == "FALSE") {
        throw UnsupportedFeatureError("boolean literal", "", at);
      }
      fail("unexpected '" + std::string(w) + "' in FILTER",
           {"variable", "literal", "'('"});
    }
    Node lhs = read_operand();
    CompareOp op = read_operator();
    Node rhs = read_operand();
    if (!is_variable(lhs) && !is_variable(rhs)) {
      throw UnsupportedFeatureError("constant comparison",
                                    "a FILTER comparison needs a variable", at);
    }
    if (!is_variable(lhs)) {
      std::swap(lhs, rhs);
      op = flip(op);
    }
    return FilterExpr::compare(op, std::get<Variable>(lhs), std::move(rhs), at);
  }

  static CompareOp flip(CompareOp op) {
    switch (op) {
      case CompareOp::Lt: return CompareOp::Gt;
      case CompareOp::Le: return CompareOp::Ge;
      case CompareOp::Gt: return CompareOp::Lt;
      case CompareOp::Ge: return CompareOp::Le;
      default: return op;
    }
  }

  Node read_operand() {
    skip_ws();
    SourcePos at = here();
    char c = peek();
    if (c == '<' || is_name_start(c) || c == ':') {
      if (is_name_start(c)) {
        std::string_view w = word_at();
        if (peek(w.size()) != ':') {
          std::size_t save = i_;
          i_ += w.size();
          skip_ws();
          if (peek() == '(') check_function(w, at);
          i_ = save;
        }
      }
      throw UnsupportedFeatureError("IRI in FILTER",
                                    "comparisons take variables and literals",
                                    at);
    }
    Node node = read_node("filter operand");
    return node;
  }

  CompareOp read_operator() {
    skip_ws();
    char c = peek();
    char d = peek(1);
    if (c == '=') {
      ++i_;
      return CompareOp::Eq;
    }
    if (c == '!' && d == '=') {
      i_ += 2;
      return CompareOp::Ne;
    }
    if (c == '<') {
      i_ += d == '=' ? 2 : 1;
      return d == '=' ? CompareOp::Le : CompareOp::Lt;
    }
    if (c == '>') {
      i_ += d == '=' ? 2 : 1;
      return d == '=' ? CompareOp::Ge : CompareOp::Gt;
    }
    fail("expected comparison operator",
         {"'='", "'!='", "'<'", "'<='", "'>'", "'>='"});
  }

  // ---- solution modifiers

  std::int64_t read_integer(const char* what) {
    skip_ws();
    std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
    if (start == i_) fail(std::string("expected integer after ") + what, {"integer"});
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + i_, value);
    if (ec != std::errc()) fail(std::string(what) + " value out of range");
    return value;
  }

  void parse_modifiers(SelectQuery& query) {
    skip_ws();
    if (at_keyword("GROUP")) {
      consume_word();
      expect_keyword("BY");
      skip_ws();
      if (peek() == '(') {
        ++i_;
        query.group_by = read_variable();
        expect_char(')');
      } else {
        query.group_by = read_variable();
      }
      skip_ws();
      if (peek() == '?' || peek() == '$' || peek() == '(') {
        throw UnsupportedFeatureError("GROUP BY", "a single grouping variable",
                                      here());
      }
    }
    skip_ws();
    if (at_keyword("HAVING")) throw UnsupportedFeatureError("HAVING", "", here());
    if (at_keyword("ORDER")) {
      consume_word();
      expect_keyword("BY");
      while (true) {
        skip_ws();
        if (at_keyword("ASC") || at_keyword("DESC")) {
          SortDirection dir =
              upper(consume_word()) == "ASC" ? SortDirection::Asc : SortDirection::Desc;
          expect_char('(');
          skip_ws();
          query.order_by.push_back(OrderKey{read_variable(), dir});
          expect_char(')');
        } else if (peek() == '?' || peek() == '$') {
          query.order_by.push_back(OrderKey{read_variable(), SortDirection::Asc});
        } else if (peek() == '(') {
          ++i_;
          skip_ws();
          query.order_by.push_back(OrderKey{read_variable(), SortDirection::Asc});
          expect_char(')');
        } else {
          break;
        }
      }
      if (query.order_by.empty()) {
        fail("expected ORDER BY key", {"variable", "ASC", "DESC"});
      }
    }
    for (int round = 0; round < 2; ++round) {
      skip_ws();
      if (at_keyword("LIMIT") && !query.limit) {
        consume_word();
        query.limit = read_integer("LIMIT");
      } else if (at_keyword("OFFSET") && !query.offset) {
        consume_word();
        query.offset = read_integer("OFFSET");
      }
    }
  }

  std::string_view src_;
  const ParseOptions& options_;
  std::size_t i_ = 0;
  std::vector<std::size_t> line_starts_;
  const std::map<std::string, std::string>* prefixes_ = nullptr;
};

// ---- pretty printing

std::string node_text(const Node& node) {
  if (const auto* v = std::get_if<Variable>(&node)) return "?" + v->name;
  const auto& term = std::get<RdfTerm>(node);
  if (term.kind() == TermKind::Number) {
    std::string text = canonical_number(term.numeric_value());
    return text;
  }
  return term.to_ntriples();
}

std::string filter_text(const FilterExpr& f) {
  switch (f.kind) {
    case FilterExpr::Kind::Compare:
      return "?" + f.lhs.name + " " + compare_op_symbol(f.op) + " " +
             node_text(f.rhs);
    case FilterExpr::Kind::And:
      return "(" + filter_text(f.operands[0]) + " && " +
             filter_text(f.operands[1]) + ")";
    case FilterExpr::Kind::Or:
      return "(" + filter_text(f.operands[0]) + " || " +
             filter_text(f.operands[1]) + ")";
  }
  return {};
}

void print_group(const GroupPattern& group, int depth, std::string& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out += "{\n";
  for (const auto& tp : group.patterns) {
    out += pad + "  " + node_text(tp.subject) + " " + tp.predicate.to_ntriples() +
           " " + node_text(tp.object) + " .\n";
  }
  for (const auto& u : group.unions) {
    out += pad + "  ";
    for (std::size_t b = 0; b < u.branches.size(); ++b) {
      if (b > 0) out += " UNION ";
      print_group(u.branches[b], depth + 1, out);
    }
    out += "\n";
  }
  for (const auto& f : group.filters) {
    out += pad + "  FILTER (" + filter_text(f) + ")\n";
  }
  for (const auto& opt : group.optionals) {
    out += pad + "  OPTIONAL ";
    print_group(opt, depth + 1, out);
    out += "\n";
  }
  out += pad + "}";
}

}  // namespace

SelectQuery parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse_query();
}

std::vector<TriplePattern> getAllBGPs(const SelectQuery& query) {
  return query.where.patterns;
}

std::string pretty_print(const SelectQuery& query) {
  std::string out;
  for (const auto& [name, base] : query.prefixes) {
    out += "PREFIX " + name + ": <" + base + ">\n";
  }
  out += "SELECT ";
  if (query.distinct) out += "DISTINCT ";
  for (std::size_t k = 0; k < query.projection.size(); ++k) {
    if (k > 0) out += ' ';
    const auto& item = query.projection[k];
    if (const auto* v = std::get_if<Variable>(&item)) {
      out += "?" + v->name;
    } else {
      const auto& c = std::get<CountAggregate>(item);
      out += "(COUNT(" + std::string(c.distinct ? "DISTINCT " : "") + "?" +
             c.argument.name + ") AS ?" + c.alias.name + ")";
    }
  }
  out += "\nWHERE ";
  print_group(query.where, 0, out);
  out += "\n";
  if (query.group_by) out += "GROUP BY ?" + query.group_by->name + "\n";
  if (!query.order_by.empty()) {
    out += "ORDER BY";
    for (const auto& key : query.order_by) {
      out += key.direction == SortDirection::Asc ? " ASC(?" : " DESC(?";
      out += key.variable.name + ")";
    }
    out += "\n";
  }
  if (query.limit) out += "LIMIT " + std::to_string(*query.limit) + "\n";
  if (query.offset) out += "OFFSET " + std::to_string(*query.offset) + "\n";
  return out;
}

}  // namespace s2g::sparql
