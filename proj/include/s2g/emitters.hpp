// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "s2g/ir.hpp"

namespace s2g {

/// Generic form of a serialized traversal: a list of instructions, each an
/// operator name with scalar or nested-traversal arguments.
struct BytecodeDoc {
  struct Instruction;
  using Argument = std::variant<std::string, double, BytecodeDoc>;

  std::vector<Instruction> steps;

  friend bool operator==(const BytecodeDoc&, const BytecodeDoc&);
};

struct BytecodeDoc::Instruction {
  std::string op;
  std::vector<Argument> args;
  friend bool operator==(const Instruction&, const Instruction&) = default;
};

inline bool operator==(const BytecodeDoc& a, const BytecodeDoc& b) {
  return a.steps == b.steps;
}

BytecodeDoc to_bytecode_doc(const ir::Traversal& traversal);

/// JSON nested-array text: `[["V"],["match",["__",...],...],...]`. Nested
/// traversals are arrays whose first element is "__". No whitespace.
std::string emit_bytecode(const ir::Traversal& traversal);
std::string emit_bytecode(const BytecodeDoc& doc);

/// Inverse of emit_bytecode. Throws ParseError.
BytecodeDoc parse_bytecode(std::string_view text);

/// Single-line Gremlin-Groovy: `g.V().match(__.as('x')...).select('y')`.
std::string emit_groovy(const ir::Traversal& traversal);

/// TinkerPop-style step listing:
/// `[GraphStep(vertex,[]), MatchStep(AND,[[MatchStartStep(x), ...]]), ...]`.
std::string emit_steps(const ir::Traversal& traversal);

/// Step listing of a single instruction:
/// `[MatchStartStep(x), HasStep([name.eq(marko)]), MatchEndStep]`.
std::string emit_steps(const SstInstruction& instruction);

}  // namespace s2g
