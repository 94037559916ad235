// SPDX-License-Identifier: Apache-2.0

#include "s2g/emitters.hpp"

#include <json.hpp>

#include "s2g/error.hpp"
#include "s2g/number.hpp"

namespace s2g {

namespace {

using Instruction = BytecodeDoc::Instruction;
using Argument = BytecodeDoc::Argument;

Argument value_arg(const PropertyValue& v) {
  if (v.is_number()) return v.as_number();
  return v.as_string();
}

const char* direction_name(sparql::SortDirection d) {
  return d == sparql::SortDirection::Asc ? "asc" : "desc";
}

void core_to_doc(const CoreStep& core, std::vector<Instruction>& out) {
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, HasStep>) {
          out.push_back({"has", {st.key, std::string("eq"), value_arg(st.value)}});
        } else if constexpr (std::is_same_v<T, HasLabelStep>) {
          out.push_back({"hasLabel", {st.label}});
        } else if constexpr (std::is_same_v<T, PropertiesStep>) {
          out.push_back({"values", {st.key}});
        } else {
          out.push_back(
              {st.direction == Direction::Out ? "out" : "in", {st.label}});
        }
      },
      core);
}

void instruction_to_doc(const SstInstruction& ins, std::vector<Instruction>& out) {
  out.push_back({"as", {ins.start}});
  core_to_doc(ins.core, out);
  if (ins.end) out.push_back({"as", {*ins.end}});
}

BytecodeDoc predicate_to_doc(const ir::PredicateTree& t) {
  BytecodeDoc doc;
  if (t.kind == ir::PredicateTree::Kind::Leaf) {
    doc.steps.push_back({"select", {t.key}});
    if (t.compares_keys()) {
      doc.steps.push_back({"where",
                           {std::string(ir::op_name(t.op)),
                            std::get<std::string>(t.operand)}});
    } else {
      doc.steps.push_back({"is",
                           {std::string(ir::op_name(t.op)),
                            value_arg(std::get<PropertyValue>(t.operand))}});
    }
    return doc;
  }
  Instruction combine{t.kind == ir::PredicateTree::Kind::And ? "and" : "or", {}};
  for (const auto& c : t.children) combine.args.push_back(predicate_to_doc(c));
  doc.steps.push_back(std::move(combine));
  return doc;
}

void step_to_doc(const ir::IrStep& step, std::vector<Instruction>& out) {
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, ir::GraphStep>) {
          out.push_back({"V", {}});
        } else if constexpr (std::is_same_v<T, ir::MatchStep>) {
          Instruction match{"match", {}};
          for (const auto& p : st.patterns) {
            BytecodeDoc nested;
            instruction_to_doc(p, nested.steps);
            match.args.push_back(std::move(nested));
          }
          out.push_back(std::move(match));
        } else if constexpr (std::is_same_v<T, ir::PatternStep>) {
          instruction_to_doc(st.pattern, out);
        } else if constexpr (std::is_same_v<T, ir::WhereTraversalStep>) {
          out.push_back({"where", {predicate_to_doc(st.predicate)}});
        } else if constexpr (std::is_same_v<T, ir::UnionStep>) {
          Instruction u{"union", {}};
          for (const auto& b : st.branches) u.args.push_back(to_bytecode_doc(b));
          out.push_back(std::move(u));
        } else if constexpr (std::is_same_v<T, ir::ChooseStep>) {
          out.push_back({"optional", {to_bytecode_doc(*st.body)}});
        } else if constexpr (std::is_same_v<T, ir::SelectStep> ||
                             std::is_same_v<T, ir::DedupStep>) {
          Instruction ins{std::is_same_v<T, ir::SelectStep> ? "select" : "dedup",
                          {}};
          for (const auto& k : st.keys) ins.args.push_back(k);
          out.push_back(std::move(ins));
        } else if constexpr (std::is_same_v<T, ir::RangeStep>) {
          out.push_back({"range",
                         {static_cast<double>(st.low),
                          static_cast<double>(st.high.value_or(-1))}});
        } else if constexpr (std::is_same_v<T, ir::OrderStep>) {
          Instruction ins{"order", {}};
          for (const auto& [key, dir] : st.keys) {
            ins.args.push_back(key);
            ins.args.push_back(std::string(direction_name(dir)));
          }
          out.push_back(std::move(ins));
        } else if constexpr (std::is_same_v<T, ir::GroupStep>) {
          out.push_back({"group", {st.key}});
        } else if constexpr (std::is_same_v<T, ir::GroupCountStep>) {
          out.push_back({"groupCount", {st.key, st.counted, st.alias}});
        } else if constexpr (std::is_same_v<T, ir::CountStep>) {
          out.push_back({"count", {st.counted, st.alias}});
        }
      },
      step);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

void write_doc(const BytecodeDoc& doc, bool nested, std::string& out);

void write_arg(const Argument& arg, std::string& out) {
  if (const auto* s = std::get_if<std::string>(&arg)) {
    out += json_string(*s);
  } else if (const auto* d = std::get_if<double>(&arg)) {
    out += canonical_number(*d);
  } else {
    write_doc(std::get<BytecodeDoc>(arg), true, out);
  }
}

void write_doc(const BytecodeDoc& doc, bool nested, std::string& out) {
  out += '[';
  bool first = true;
  if (nested) {
    out += "\"__\"";
    first = false;
  }
  for (const auto& ins : doc.steps) {
    if (!first) out += ',';
    first = false;
    out += '[';
    out += json_string(ins.op);
    for (const auto& a : ins.args) {
      out += ',';
      write_arg(a, out);
    }
    out += ']';
  }
  out += ']';
}

BytecodeDoc read_doc(const nlohmann::json& array, bool nested);

Instruction read_instruction(const nlohmann::json& step) {
  if (!step.is_array() || step.empty() || !step[0].is_string()) {
    throw ParseError("bytecode step must be an array headed by an operator", {});
  }
  Instruction ins{step[0].get<std::string>(), {}};
  for (std::size_t k = 1; k < step.size(); ++k) {
    const auto& a = step[k];
    if (a.is_string()) {
      ins.args.emplace_back(a.get<std::string>());
    } else if (a.is_number()) {
      ins.args.emplace_back(a.get<double>());
    } else if (a.is_array()) {
      ins.args.emplace_back(read_doc(a, true));
    } else {
      throw ParseError("unsupported bytecode argument in '" + ins.op + "'", {});
    }
  }
  return ins;
}

BytecodeDoc read_doc(const nlohmann::json& array, bool nested) {
  if (!array.is_array()) throw ParseError("bytecode must be an array", {});
  std::size_t k = 0;
  if (nested) {
    if (array.empty() || array[0] != "__") {
      throw ParseError("nested traversal must start with \"__\"", {});
    }
    k = 1;
  }
  BytecodeDoc doc;
  for (; k < array.size(); ++k) doc.steps.push_back(read_instruction(array[k]));
  return doc;
}

// ---- groovy

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "'";
}

std::string groovy_value(const PropertyValue& v) {
  return v.is_number() ? canonical_number(v.as_number()) : quote(v.as_string());
}

std::string join_quoted(const std::vector<std::string>& keys) {
  std::string out;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k > 0) out += ',';
    out += quote(keys[k]);
  }
  return out;
}

std::string groovy_core(const CoreStep& core) {
  return std::visit(
      [](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, HasStep>) {
          return ".has(" + quote(st.key) + "," + groovy_value(st.value) + ")";
        } else if constexpr (std::is_same_v<T, HasLabelStep>) {
          return ".hasLabel(" + quote(st.label) + ")";
        } else if constexpr (std::is_same_v<T, PropertiesStep>) {
          return ".values(" + quote(st.key) + ")";
        } else {
          return std::string(st.direction == Direction::Out ? ".out(" : ".in(") +
                 quote(st.label) + ")";
        }
      },
      core);
}

std::string groovy_instruction(const SstInstruction& ins) {
  std::string out = ".as(" + quote(ins.start) + ")" + groovy_core(ins.core);
  if (ins.end) out += ".as(" + quote(*ins.end) + ")";
  return out;
}

std::string groovy_predicate(const ir::PredicateTree& t) {
  if (t.kind == ir::PredicateTree::Kind::Leaf) {
    std::string out = "__.select(" + quote(t.key) + ")";
    if (t.compares_keys()) {
      return out + ".where(" + ir::op_name(t.op) + "(" +
             quote(std::get<std::string>(t.operand)) + "))";
    }
    return out + ".is(" + ir::op_name(t.op) + "(" +
           groovy_value(std::get<PropertyValue>(t.operand)) + "))";
  }
  std::string out = t.kind == ir::PredicateTree::Kind::And ? "__.and(" : "__.or(";
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k > 0) out += ", ";
    out += groovy_predicate(t.children[k]);
  }
  return out + ")";
}

std::string groovy_steps(const ir::Traversal& t);

std::string groovy_step(const ir::IrStep& step) {
  return std::visit(
      [](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, ir::GraphStep>) {
          return ".V()";
        } else if constexpr (std::is_same_v<T, ir::MatchStep>) {
          std::string out = ".match(";
          for (std::size_t k = 0; k < st.patterns.size(); ++k) {
            if (k > 0) out += ", ";
            out += "__" + groovy_instruction(st.patterns[k]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, ir::PatternStep>) {
          return groovy_instruction(st.pattern);
        } else if constexpr (std::is_same_v<T, ir::WhereTraversalStep>) {
          return ".where(" + groovy_predicate(st.predicate) + ")";
        } else if constexpr (std::is_same_v<T, ir::UnionStep>) {
          std::string out = ".union(";
          for (std::size_t k = 0; k < st.branches.size(); ++k) {
            if (k > 0) out += ", ";
            out += "__" + groovy_steps(st.branches[k]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, ir::ChooseStep>) {
          return ".optional(__" + groovy_steps(*st.body) + ")";
        } else if constexpr (std::is_same_v<T, ir::SelectStep>) {
          return ".select(" + join_quoted(st.keys) + ")";
        } else if constexpr (std::is_same_v<T, ir::DedupStep>) {
          return ".dedup(" + join_quoted(st.keys) + ")";
        } else if constexpr (std::is_same_v<T, ir::RangeStep>) {
          return ".range(" + std::to_string(st.low) + "," +
                 std::to_string(st.high.value_or(-1)) + ")";
        } else if constexpr (std::is_same_v<T, ir::OrderStep>) {
          std::string out = ".order()";
          for (const auto& [key, dir] : st.keys) {
            out += ".by(" + quote(key) + "," + direction_name(dir) + ")";
          }
          return out;
        } else if constexpr (std::is_same_v<T, ir::GroupStep>) {
          return ".group().by(" + quote(st.key) + ")";
        } else if constexpr (std::is_same_v<T, ir::GroupCountStep>) {
          return ".group().by(select(" + quote(st.key) + ")).by(select(" +
                 quote(st.counted) + ").count()).as(" + quote(st.alias) + ")";
        } else {
          return ".select(" + quote(st.counted) + ").count().as(" +
                 quote(st.alias) + ")";
        }
      },
      step);
}

std::string groovy_steps(const ir::Traversal& t) {
  std::string out;
  for (const auto& s : t.steps) out += groovy_step(s);
  return out;
}

// ---- step listing

std::string listing_value(const PropertyValue& v) { return v.text(); }

std::string listing_core(const CoreStep& core) {
  return std::visit(
      [](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, HasStep>) {
          return "HasStep([" + st.key + ".eq(" + listing_value(st.value) + ")])";
        } else if constexpr (std::is_same_v<T, HasLabelStep>) {
          return "HasStep([~label.eq(" + st.label + ")])";
        } else if constexpr (std::is_same_v<T, PropertiesStep>) {
          return "PropertiesStep([" + st.key + "],value)";
        } else {
          return std::string("VertexStep(") +
                 (st.direction == Direction::Out ? "OUT" : "IN") + ",[" +
                 st.label + "],vertex)";
        }
      },
      core);
}

std::string listing_instruction_body(const SstInstruction& ins) {
  std::string out = "MatchStartStep(" + ins.start + "), " + listing_core(ins.core);
  out += ins.end ? ", MatchEndStep(" + *ins.end + ")" : ", MatchEndStep";
  return out;
}

std::string listing_predicate(const ir::PredicateTree& t) {
  if (t.kind == ir::PredicateTree::Kind::Leaf) {
    std::string out = "WhereStartStep(" + t.key + "), ";
    if (t.compares_keys()) {
      return out + "WherePredicateStep(" + ir::op_name(t.op) + "(" +
             std::get<std::string>(t.operand) + "))";
    }
    return out + "IsStep(" + ir::op_name(t.op) + "(" +
           listing_value(std::get<PropertyValue>(t.operand)) + "))";
  }
  std::string out = t.kind == ir::PredicateTree::Kind::And ? "AndStep([" : "OrStep([";
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k > 0) out += ", ";
    out += "[" + listing_predicate(t.children[k]) + "]";
  }
  return out + "])";
}

std::string join_plain(const std::vector<std::string>& keys, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (k > 0) out += sep;
    out += keys[k];
  }
  return out;
}

std::string listing_step(const ir::IrStep& step) {
  return std::visit(
      [](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, ir::GraphStep>) {
          return "GraphStep(vertex,[])";
        } else if constexpr (std::is_same_v<T, ir::MatchStep>) {
          std::string out = "MatchStep(AND,[";
          for (std::size_t k = 0; k < st.patterns.size(); ++k) {
            if (k > 0) out += ", ";
            out += "[" + listing_instruction_body(st.patterns[k]) + "]";
          }
          return out + "])";
        } else if constexpr (std::is_same_v<T, ir::PatternStep>) {
          return listing_instruction_body(st.pattern);
        } else if constexpr (std::is_same_v<T, ir::WhereTraversalStep>) {
          return "WhereTraversalStep([" + listing_predicate(st.predicate) + "])";
        } else if constexpr (std::is_same_v<T, ir::UnionStep>) {
          std::string out = "UnionStep([";
          for (std::size_t k = 0; k < st.branches.size(); ++k) {
            if (k > 0) out += ", ";
            out += emit_steps(st.branches[k]);
          }
          return out + "])";
        } else if constexpr (std::is_same_v<T, ir::ChooseStep>) {
          return "ChooseStep(" + emit_steps(*st.body) + ")";
        } else if constexpr (std::is_same_v<T, ir::SelectStep>) {
          return "SelectStep([" + join_plain(st.keys, ", ") + "])";
        } else if constexpr (std::is_same_v<T, ir::DedupStep>) {
          return "DedupStep([" + join_plain(st.keys, ",") + "])";
        } else if constexpr (std::is_same_v<T, ir::RangeStep>) {
          return "RangeStep(" + std::to_string(st.low) + "," +
                 std::to_string(st.high.value_or(-1)) + ")";
        } else if constexpr (std::is_same_v<T, ir::OrderStep>) {
          std::string out = "OrderStep([";
          for (std::size_t k = 0; k < st.keys.size(); ++k) {
            if (k > 0) out += ", ";
            out += "[value(" + st.keys[k].first + "), " +
                   direction_name(st.keys[k].second) + "]";
          }
          return out + "])";
        } else if constexpr (std::is_same_v<T, ir::GroupStep>) {
          return "GroupStep(value(" + st.key + "))";
        } else if constexpr (std::is_same_v<T, ir::GroupCountStep>) {
          return "GroupCountStep(value(" + st.key + "),count(" + st.counted +
                 "))@[" + st.alias + "]";
        } else {
          return "CountStep(" + st.counted + ")@[" + st.alias + "]";
        }
      },
      step);
}

}  // namespace

BytecodeDoc to_bytecode_doc(const ir::Traversal& traversal) {
  BytecodeDoc doc;
  for (const auto& step : traversal.steps) step_to_doc(step, doc.steps);
  return doc;
}

std::string emit_bytecode(const ir::Traversal& traversal) {
  return emit_bytecode(to_bytecode_doc(traversal));
}

std::string emit_bytecode(const BytecodeDoc& doc) {
  std::string out;
  write_doc(doc, false, out);
  return out;
}

BytecodeDoc parse_bytecode(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed bytecode: ") + e.what(), {});
  }
  return read_doc(parsed, false);
}

std::string emit_groovy(const ir::Traversal& traversal) {
  return "g" + groovy_steps(traversal);
}

std::string emit_steps(const ir::Traversal& traversal) {
  std::string out = "[";
  for (std::size_t k = 0; k < traversal.steps.size(); ++k) {
    if (k > 0) out += ", ";
    out += listing_step(traversal.steps[k]);
  }
  return out + "]";
}

std::string emit_steps(const SstInstruction& instruction) {
  return "[" + listing_instruction_body(instruction) + "]";
}

}  // namespace s2g
