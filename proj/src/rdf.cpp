// SPDX-License-Identifier: Apache-2.0

#include "s2g/rdf.hpp"

#include <cstdio>

#include "s2g/number.hpp"

namespace s2g {

RdfTerm RdfTerm::iri(std::string text) {
  return RdfTerm(TermKind::Iri, std::move(text), 0.0);
}

RdfTerm RdfTerm::string(std::string text) {
  return RdfTerm(TermKind::String, std::move(text), 0.0);
}

RdfTerm RdfTerm::number(std::string lexical) {
  auto value = parse_numeral(lexical);
  if (!value) throw ParseError("not a numeral: " + lexical, {});
  return RdfTerm(TermKind::Number, std::move(lexical), *value);
}

RdfTerm RdfTerm::number(double value) {
  return RdfTerm(TermKind::Number, canonical_number(value), value);
}

std::string RdfTerm::to_ntriples() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + lexical_ + ">";
    case TermKind::String:
      return "\"" + escape_string_literal(lexical_) + "\"";
    case TermKind::Number:
      return canonical_number(value_);
  }
  return {};
}

bool operator==(const RdfTerm& a, const RdfTerm& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == TermKind::Number) return a.value_ == b.value_;
  return a.lexical_ == b.lexical_;
}

std::strong_ordering operator<=>(const RdfTerm& a, const RdfTerm& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == TermKind::Number) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return a.lexical_ <=> b.lexical_;
}

bool RdfGraph::add(Triple triple) {
  if (!triple.subject.is_iri()) {
    throw ClassificationError("triple subject must be an IRI: " +
                              triple.subject.to_ntriples());
  }
  if (!triple.predicate.is_iri()) {
    throw ClassificationError("triple predicate must be an IRI: " +
                              triple.predicate.to_ntriples());
  }
  return triples_.insert(std::move(triple)).second;
}

namespace {

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (i_ < line_.size() && (line_[i_] == ' ' || line_[i_] == '\t')) ++i_;
  }
  bool at_end() const { return i_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[i_]; }
  SourcePos pos() const { return {line_no_, i_ + 1}; }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) const {
    throw ParseError(message, pos(), std::move(expected));
  }

  std::string read_iri() {
    // at '<'
    ++i_;
    std::size_t start = i_;
    while (i_ < line_.size() && line_[i_] != '>') {
      char c = line_[i_];
      if (c == ' ' || c == '\t' || c == '<' || c == '"') {
        fail("invalid character in IRI");
      }
      ++i_;
    }
    if (at_end()) fail("unterminated IRI", {"'>'"});
    std::string iri(line_.substr(start, i_ - start));
    ++i_;
    if (iri.empty()) fail("empty IRI");
    return iri;
  }

  std::string read_quoted() {
    // at '"'
    ++i_;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string literal", {"'\"'"});
      char c = line_[i_++];
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("dangling escape");
      char e = line_[i_++];
      switch (e) {
        case 't': out += '\t'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          std::size_t width = e == 'u' ? 4 : 8;
          if (i_ + width > line_.size()) fail("truncated unicode escape");
          unsigned long cp = 0;
          for (std::size_t k = 0; k < width; ++k) {
            char h = line_[i_ + k];
            int digit = (h >= '0' && h <= '9')   ? h - '0'
                        : (h >= 'a' && h <= 'f') ? h - 'a' + 10
                        : (h >= 'A' && h <= 'F') ? h - 'A' + 10
                                                 : -1;
            if (digit < 0) fail("invalid unicode escape");
            cp = cp * 16 + static_cast<unsigned long>(digit);
          }
          i_ += width;
          append_utf8(out, cp);
          break;
        }
        default:
          fail(std::string("unknown escape \\") + e);
      }
    }
    return out;
  }

  std::string read_bare() {
    std::size_t start = i_;
    while (i_ < line_.size() && line_[i_] != ' ' && line_[i_] != '\t') ++i_;
    std::string token(line_.substr(start, i_ - start));
    // A numeral glued to the final dot: "29."
    if (token.size() > 1 && token.back() == '.' &&
        is_numeral(std::string_view(token).substr(0, token.size() - 1))) {
      token.pop_back();
      --i_;
    }
    return token;
  }

  RdfTerm read_term(const char* role) {
    skip_ws();
    char c = peek();
    if (c == '<') return RdfTerm::iri(read_iri());
    if (c == '_' && i_ + 1 < line_.size() && line_[i_ + 1] == ':') {
      throw UnsupportedFeatureError("blank node", role, pos());
    }
    if (std::string_view(role) != "object") {
      fail(std::string("expected IRI as ") + role, {"IRI"});
    }
    if (c == '"') {
      SourcePos at = pos();
      std::string body = read_quoted();
      if (peek() == '@') {
        throw UnsupportedFeatureError("language tag", "literal \"" + body + "\"",
                                      at);
      }
      if (peek() == '^') {
        if (line_.substr(i_, 3) != "^^<") fail("malformed datatype", {"'^^<'"});
        i_ += 2;
        std::string datatype = read_iri();
        return typed_literal(body, datatype, at);
      }
      return RdfTerm::string(std::move(body));
    }
    SourcePos at = pos();
    std::string token = read_bare();
    if (token.empty()) fail("missing object", {"IRI", "literal", "numeral"});
    if (!is_numeral(token)) {
      throw ParseError("invalid object token '" + token + "'", at,
                       {"IRI", "literal", "numeral"});
    }
    return RdfTerm::number(token);
  }

  void expect_end() {
    skip_ws();
    if (peek() != '.') fail("missing statement terminator", {"'.'"});
    ++i_;
    skip_ws();
    if (!at_end() && peek() != '#') fail("trailing characters after '.'");
  }

 private:
  RdfTerm typed_literal(const std::string& body, const std::string& datatype,
                        SourcePos at) const {
    if (datatype.rfind(kXsd, 0) != 0) {
      throw UnsupportedFeatureError("datatype", datatype, at);
    }
    std::string_view local = std::string_view(datatype).substr(kXsd.size());
    if (local == "string") return RdfTerm::string(body);
    if (local == "integer" || local == "int" || local == "long" ||
        local == "decimal" || local == "double" || local == "float" ||
        local == "short" || local == "nonNegativeInteger") {
      if (!is_numeral(body)) {
        throw ParseError("literal \"" + body + "\" is not a numeral", at);
      }
      return RdfTerm::number(body);
    }
    throw UnsupportedFeatureError("datatype", datatype, at);
  }

  static void append_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t i_ = 0;
};

}  // namespace

RdfGraph load_ntriples(std::string_view text) {
  RdfGraph graph;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    begin = end + 1;

    LineReader reader(line, line_no);
    reader.skip_ws();
    if (reader.at_end() || reader.peek() == '#') continue;
    RdfTerm s = reader.read_term("subject");
    RdfTerm p = reader.read_term("predicate");
    RdfTerm o = reader.read_term("object");
    reader.expect_end();
    graph.add(Triple{std::move(s), std::move(p), std::move(o)});
  }
  return graph;
}

std::string serialize_ntriples(const RdfGraph& graph) {
  std::string out;
  for (const auto& t : graph.triples()) {
    out += t.subject.to_ntriples();
    out += ' ';
    out += t.predicate.to_ntriples();
    out += ' ';
    out += t.object.to_ntriples();
    out += " .\n";
  }
  return out;
}

std::string escape_string_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string_view local_name(std::string_view iri) {
  std::size_t cut = iri.find_last_of("/#");
  if (cut == std::string_view::npos) return iri;
  return iri.substr(cut + 1);
}

}  // namespace s2g
