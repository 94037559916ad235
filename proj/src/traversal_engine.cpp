// SPDX-License-Identifier: Apache-2.0

#include "s2g/traversal_engine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "s2g/error.hpp"

namespace s2g::engine {

namespace {

using ir::PredicateTree;

// ---- value helpers

int rank(const Value* v) {
  if (v == nullptr) return 0;
  if (const auto* p = std::get_if<PropertyValue>(v)) return p->is_number() ? 1 : 2;
  return std::get<ElementRef>(*v).kind == ElementKind::Vertex ? 3 : 4;
}

template <class T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

const Value* lookup(const Bindings& b, const std::string& key) {
  auto it = b.find(key);
  return it == b.end() ? nullptr : &it->second;
}

std::string describe(const Value& v) {
  if (const auto* p = std::get_if<PropertyValue>(&v)) {
    return p->is_number() ? "number " + p->text() : "string \"" + p->text() + "\"";
  }
  const auto& e = std::get<ElementRef>(v);
  return (e.kind == ElementKind::Vertex ? "vertex " : "edge ") + std::to_string(e.id);
}

bool holds(PredicateTree::Op op, int cmp) {
  switch (op) {
    case PredicateTree::Op::Eq: return cmp == 0;
    case PredicateTree::Op::Neq: return cmp != 0;
    case PredicateTree::Op::Lt: return cmp < 0;
    case PredicateTree::Op::Lte: return cmp <= 0;
    case PredicateTree::Op::Gt: return cmp > 0;
    case PredicateTree::Op::Gte: return cmp >= 0;
  }
  return false;
}

// Comparison for WhereTraversalStep. Throws TypeError across kinds.
bool compare_values(const Value& a, const Value& b, PredicateTree::Op op) {
  const auto* pa = std::get_if<PropertyValue>(&a);
  const auto* pb = std::get_if<PropertyValue>(&b);
  if (pa && pb) {
    if (pa->kind() != pb->kind()) {
      throw TypeError("cannot compare " + describe(a) + " with " + describe(b));
    }
    return holds(op, pa->is_number() ? three_way(pa->as_number(), pb->as_number())
                                     : three_way(pa->as_string(), pb->as_string()));
  }
  if (!pa && !pb) {
    if (op != PredicateTree::Op::Eq && op != PredicateTree::Op::Neq) {
      throw TypeError(std::string("ordering comparison '") + ir::op_name(op) +
                      "' on graph elements");
    }
    bool same = std::get<ElementRef>(a) == std::get<ElementRef>(b);
    return op == PredicateTree::Op::Eq ? same : !same;
  }
  throw TypeError("cannot compare " + describe(a) + " with " + describe(b));
}

bool satisfies(const PredicateTree& t, const Bindings& b) {
  switch (t.kind) {
    case PredicateTree::Kind::And:
      for (const auto& c : t.children) {
        if (!satisfies(c, b)) return false;
      }
      return true;
    case PredicateTree::Kind::Or:
      for (const auto& c : t.children) {
        if (satisfies(c, b)) return true;
      }
      return false;
    case PredicateTree::Kind::Leaf:
      break;
  }
  const Value* lhs = lookup(b, t.key);
  if (lhs == nullptr) return false;
  if (t.compares_keys()) {
    const Value* rhs = lookup(b, std::get<std::string>(t.operand));
    if (rhs == nullptr) return false;
    return compare_values(*lhs, *rhs, t.op);
  }
  return compare_values(*lhs, Value{std::get<PropertyValue>(t.operand)}, t.op);
}

// ---- pattern matching

class Matcher {
 public:
  Matcher(const std::vector<SstInstruction>& patterns, const PropertyGraph& graph)
      : patterns_(patterns), graph_(graph), used_(patterns.size(), false) {}

  void run(const Traverser& t, const std::function<void(const Bindings&)>& emit) {
    Bindings b = t.bindings;
    if (t.seed && !patterns_.empty() && !lookup(b, patterns_.front().start)) {
      if (const auto* at = std::get_if<ElementRef>(&t.location)) {
        b[patterns_.front().start] = *at;
      } else if (const auto* pv = std::get_if<PropertyValue>(&t.location)) {
        b[patterns_.front().start] = *pv;
      }
    }
    emit_ = &emit;
    solve(b, 0);
  }

 private:
  void solve(Bindings& b, std::size_t done) {
    if (done == patterns_.size()) {
      (*emit_)(b);
      return;
    }
    std::size_t pick = patterns_.size();
    bool reverse = false;
    for (std::size_t i = 0; i < patterns_.size() && pick == patterns_.size(); ++i) {
      if (!used_[i] && lookup(b, patterns_[i].start)) pick = i;
    }
    for (std::size_t i = 0; i < patterns_.size() && pick == patterns_.size(); ++i) {
      const auto& p = patterns_[i];
      if (!used_[i] && std::holds_alternative<VertexStep>(p.core) && p.end &&
          lookup(b, *p.end)) {
        pick = i;
        reverse = true;
      }
    }
    for (std::size_t i = 0; i < patterns_.size() && pick == patterns_.size(); ++i) {
      if (!used_[i]) pick = i;
    }
    used_[pick] = true;
    const SstInstruction& p = patterns_[pick];
    if (reverse) {
      solve_reverse(p, b, done);
    } else if (const Value* start = lookup(b, p.start)) {
      if (const auto* e = std::get_if<ElementRef>(start)) apply(p, *e, b, done);
    } else {
      for (const auto& v : graph_.vertices()) {
        ElementRef at{ElementKind::Vertex, v.id};
        b[p.start] = at;
        apply(p, at, b, done);
      }
      b.erase(p.start);
    }
    used_[pick] = false;
  }

  // Binds `name` to `value` (or checks it) and continues.
  void bind_and_solve(const std::string& name, const Value& value, Bindings& b,
                      std::size_t done) {
    if (const Value* have = lookup(b, name)) {
      if (*have == value) solve(b, done + 1);
      return;
    }
    b[name] = value;
    solve(b, done + 1);
    b.erase(name);
  }

  void apply(const SstInstruction& p, ElementRef at, Bindings& b,
             std::size_t done) {
    std::visit(
        [&](const auto& core) {
          using T = std::decay_t<decltype(core)>;
          if constexpr (std::is_same_v<T, HasStep>) {
            const PropertyValue* v = graph_.property(at, core.key);
            if (v && *v == core.value) solve(b, done + 1);
          } else if constexpr (std::is_same_v<T, HasLabelStep>) {
            const std::string* label = graph_.label_of(at);
            if (label && *label == core.label) solve(b, done + 1);
          } else if constexpr (std::is_same_v<T, PropertiesStep>) {
            const PropertyValue* v = graph_.property(at, core.key);
            if (v == nullptr) return;
            if (p.end) {
              bind_and_solve(*p.end, Value{*v}, b, done);
            } else {
              solve(b, done + 1);
            }
          } else {
            if (at.kind != ElementKind::Vertex) return;
            const auto& edges = core.direction == Direction::Out
                                    ? graph_.out_edges(at.id)
                                    : graph_.in_edges(at.id);
            for (const Edge* e : edges) {
              if (e->label != core.label) continue;
              ElementRef other{ElementKind::Vertex,
                               core.direction == Direction::Out ? e->dst : e->src};
              if (p.end) {
                bind_and_solve(*p.end, Value{other}, b, done);
              } else {
                solve(b, done + 1);
              }
            }
          }
        },
        p.core);
  }

  // VertexStep with its end bound and start free: walk the edge backwards.
  void solve_reverse(const SstInstruction& p, Bindings& b, std::size_t done) {
    const auto& step = std::get<VertexStep>(p.core);
    const auto* end = std::get_if<ElementRef>(lookup(b, *p.end));
    if (end == nullptr || end->kind != ElementKind::Vertex) return;
    const auto& edges = step.direction == Direction::Out ? graph_.in_edges(end->id)
                                                         : graph_.out_edges(end->id);
    for (const Edge* e : edges) {
      if (e->label != step.label) continue;
      ElementRef start{ElementKind::Vertex,
                       step.direction == Direction::Out ? e->src : e->dst};
      bind_and_solve(p.start, Value{start}, b, done);
    }
  }

  const std::vector<SstInstruction>& patterns_;
  const PropertyGraph& graph_;
  std::vector<bool> used_;
  const std::function<void(const Bindings&)>* emit_ = nullptr;
};

// ---- stream helpers

void merge_adjacent(std::vector<Traverser>& stream) {
  std::vector<Traverser> out;
  out.reserve(stream.size());
  for (auto& t : stream) {
    if (!out.empty() && out.back().location == t.location &&
        out.back().bindings == t.bindings && out.back().seed == t.seed) {
      out.back().bulk += t.bulk;
    } else {
      out.push_back(std::move(t));
    }
  }
  stream = std::move(out);
}

void note_known(ExecState& state, const std::string& name) {
  if (std::find(state.known.begin(), state.known.end(), name) == state.known.end()) {
    state.known.push_back(name);
  }
}

void note_introduced(const ir::Traversal& t, ExecState& state);

void note_introduced(const ir::IrStep& step, ExecState& state) {
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, ir::MatchStep>) {
          for (const auto& p : st.patterns) {
            note_known(state, p.start);
            if (p.end) note_known(state, *p.end);
          }
        } else if constexpr (std::is_same_v<T, ir::PatternStep>) {
          note_known(state, st.pattern.start);
          if (st.pattern.end) note_known(state, *st.pattern.end);
        } else if constexpr (std::is_same_v<T, ir::UnionStep>) {
          for (const auto& b : st.branches) note_introduced(b, state);
        } else if constexpr (std::is_same_v<T, ir::ChooseStep>) {
          note_introduced(*st.body, state);
        }
      },
      step);
}

void note_introduced(const ir::Traversal& t, ExecState& state) {
  for (const auto& s : t.steps) note_introduced(s, state);
}

void require_known(const ExecState& state, const std::string& key,
                   const char* step) {
  if (std::find(state.known.begin(), state.known.end(), key) == state.known.end()) {
    throw EvaluationError(std::string(step) + " references ?" + key +
                          ", which no earlier step binds");
  }
}

std::vector<Traverser> run_nested(const ir::Traversal& t,
                                  std::vector<Traverser> input,
                                  const PropertyGraph& graph, ExecState& state,
                                  const ExecOptions& options) {
  ExecState inner = state;
  for (const auto& step : t.steps) {
    input = execute_step(step, std::move(input), graph, inner, options);
  }
  for (const auto& k : inner.known) note_known(state, k);
  return input;
}

int compare_keys(const Traverser& a, const Traverser& b,
                 const std::vector<std::string>& keys, const PropertyGraph& graph,
                 const std::string& id_key) {
  for (const auto& k : keys) {
    int c = compare_for_order(lookup(a.bindings, k), lookup(b.bindings, k), graph,
                              id_key);
    if (c != 0) return c;
  }
  return 0;
}

std::vector<Traverser> group_rows(std::vector<Traverser> input,
                                  const std::string& key,
                                  const PropertyGraph& graph,
                                  const std::string& id_key) {
  std::stable_sort(input.begin(), input.end(),
                   [&](const Traverser& a, const Traverser& b) {
                     return compare_for_order(lookup(a.bindings, key),
                                              lookup(b.bindings, key), graph,
                                              id_key) < 0;
                   });
  return input;
}

}  // namespace

int compare_for_order(const Value* a, const Value* b, const PropertyGraph& graph,
                      const std::string& id_key) {
  int ra = rank(a);
  int rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra == 0) return 0;
  if (ra == 1) {
    return three_way(std::get<PropertyValue>(*a).as_number(),
                     std::get<PropertyValue>(*b).as_number());
  }
  if (ra == 2) {
    return three_way(std::get<PropertyValue>(*a).as_string(),
                     std::get<PropertyValue>(*b).as_string());
  }
  const auto& ea = std::get<ElementRef>(*a);
  const auto& eb = std::get<ElementRef>(*b);
  if (ra == 3 && !id_key.empty()) {
    const PropertyValue* ia = graph.property(ea, id_key);
    const PropertyValue* ib = graph.property(eb, id_key);
    if (ia && ib) {
      int c = three_way(ia->text(), ib->text());
      if (c != 0) return c;
    } else if (ia || ib) {
      return ia ? 1 : -1;
    }
  }
  return three_way(ea.id, eb.id);
}

std::vector<Traverser> execute_step(const ir::IrStep& step,
                                    std::vector<Traverser> input,
                                    const PropertyGraph& graph, ExecState& state,
                                    const ExecOptions& options) {
  note_introduced(step, state);
  std::vector<Traverser> out;

  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, ir::GraphStep>) {
          for (const auto& t : input) {
            for (const auto& v : graph.vertices()) {
              out.push_back(Traverser{ElementRef{ElementKind::Vertex, v.id},
                                      t.bindings, t.bulk, true});
            }
          }
        } else if constexpr (std::is_same_v<T, ir::MatchStep> ||
                             std::is_same_v<T, ir::PatternStep>) {
          std::vector<SstInstruction> single;
          const std::vector<SstInstruction>* patterns = nullptr;
          if constexpr (std::is_same_v<T, ir::MatchStep>) {
            patterns = &st.patterns;
          } else {
            single.push_back(st.pattern);
            patterns = &single;
          }
          for (const auto& t : input) {
            Matcher matcher(*patterns, graph);
            std::function<void(const Bindings&)> emit = [&](const Bindings& b) {
              Location loc = t.location;
              if constexpr (std::is_same_v<T, ir::PatternStep>) {
                const auto& p = st.pattern;
                const Value* at = lookup(b, p.end ? *p.end : p.start);
                if (at) {
                  loc = std::visit([](const auto& x) -> Location { return x; }, *at);
                }
              }
              out.push_back(Traverser{loc, b, t.bulk, false});
            };
            matcher.run(t, emit);
          }
        } else if constexpr (std::is_same_v<T, ir::WhereTraversalStep>) {
          for (auto& t : input) {
            if (satisfies(st.predicate, t.bindings)) out.push_back(std::move(t));
          }
        } else if constexpr (std::is_same_v<T, ir::UnionStep>) {
          for (const auto& t : input) {
            for (const auto& branch : st.branches) {
              auto results = run_nested(branch, {t}, graph, state, options);
              for (auto& r : results) {
                r.seed = false;
                out.push_back(std::move(r));
              }
            }
          }
        } else if constexpr (std::is_same_v<T, ir::ChooseStep>) {
          for (const auto& t : input) {
            Traverser probe = t;
            probe.seed = false;
            auto results = run_nested(*st.body, {probe}, graph, state, options);
            if (results.empty()) {
              out.push_back(t);
            } else {
              for (auto& r : results) out.push_back(std::move(r));
            }
          }
        } else if constexpr (std::is_same_v<T, ir::SelectStep>) {
          state.columns = st.keys;
          state.selected = true;
          out = std::move(input);
        } else if constexpr (std::is_same_v<T, ir::DedupStep>) {
          std::set<std::vector<std::optional<Value>>> seen;
          for (auto& t : input) {
            std::vector<std::optional<Value>> key;
            for (const auto& k : st.keys) {
              const Value* v = lookup(t.bindings, k);
              key.push_back(v ? std::optional<Value>(*v) : std::nullopt);
            }
            if (seen.insert(std::move(key)).second) {
              t.bulk = 1;
              out.push_back(std::move(t));
            }
          }
        } else if constexpr (std::is_same_v<T, ir::RangeStep>) {
          std::int64_t position = 0;
          for (auto& t : input) {
            std::int64_t begin = position;
            std::int64_t end = position + t.bulk;
            position = end;
            std::int64_t lo = std::max(begin, st.low);
            std::int64_t hi = st.high ? std::min(end, *st.high) : end;
            if (hi > lo) {
              t.bulk = hi - lo;
              out.push_back(std::move(t));
            }
            if (st.high && position >= *st.high) break;
          }
        } else if constexpr (std::is_same_v<T, ir::OrderStep>) {
          for (const auto& [key, dir] : st.keys) require_known(state, key, "OrderStep");
          const std::vector<std::string> tiebreak = state.columns;
          out = std::move(input);
          std::stable_sort(
              out.begin(), out.end(), [&](const Traverser& a, const Traverser& b) {
                for (const auto& [key, dir] : st.keys) {
                  int c = compare_for_order(lookup(a.bindings, key),
                                            lookup(b.bindings, key), graph,
                                            options.id_key);
                  if (c != 0) {
                    return dir == sparql::SortDirection::Asc ? c < 0 : c > 0;
                  }
                }
                return compare_keys(a, b, tiebreak, graph, options.id_key) < 0;
              });
        } else if constexpr (std::is_same_v<T, ir::GroupStep>) {
          require_known(state, st.key, "GroupStep");
          out = group_rows(std::move(input), st.key, graph, options.id_key);
        } else if constexpr (std::is_same_v<T, ir::GroupCountStep>) {
          require_known(state, st.key, "GroupCountStep");
          auto rows = group_rows(std::move(input), st.key, graph, options.id_key);
          for (std::size_t i = 0; i < rows.size();) {
            const Value* key = lookup(rows[i].bindings, st.key);
            std::int64_t count = 0;
            std::size_t j = i;
            for (; j < rows.size(); ++j) {
              const Value* k = lookup(rows[j].bindings, st.key);
              if (compare_for_order(key, k, graph, options.id_key) != 0) break;
              if (lookup(rows[j].bindings, st.counted)) count += rows[j].bulk;
            }
            Bindings b;
            if (key) b[st.key] = *key;
            b[st.alias] = PropertyValue::number(static_cast<double>(count));
            out.push_back(Traverser{std::monostate{}, std::move(b), 1, false});
            i = j;
          }
          state.columns = {st.key, st.alias};
          state.selected = true;
          state.known = {st.key, st.alias};
        } else if constexpr (std::is_same_v<T, ir::CountStep>) {
          std::int64_t count = 0;
          for (const auto& t : input) {
            if (lookup(t.bindings, st.counted)) count += t.bulk;
          }
          Bindings b;
          b[st.alias] = PropertyValue::number(static_cast<double>(count));
          out.push_back(Traverser{std::monostate{}, std::move(b), 1, false});
          state.columns = {st.alias};
          state.selected = true;
          state.known = {st.alias};
        }
      },
      step);

  if (options.bulking) merge_adjacent(out);
  return out;
}

SolutionMultiset execute(const ir::Traversal& traversal, const PropertyGraph& graph,
                         const ExecOptions& options) {
  ExecState state;
  std::vector<Traverser> stream{Traverser{}};
  for (const auto& step : traversal.steps) {
    stream = execute_step(step, std::move(stream), graph, state, options);
  }
  SolutionMultiset result;
  if (state.selected) {
    result.columns = state.columns;
  } else {
    std::set<std::string> names;
    for (const auto& t : stream) {
      for (const auto& [k, v] : t.bindings) names.insert(k);
    }
    result.columns.assign(names.begin(), names.end());
  }
  for (const auto& t : stream) {
    Row row;
    for (const auto& c : result.columns) {
      const Value* v = lookup(t.bindings, c);
      if (v == nullptr) {
        row.emplace_back(Unbound{});
      } else {
        row.push_back(std::visit([](const auto& x) -> Cell { return x; }, *v));
      }
    }
    for (std::int64_t k = 0; k < t.bulk; ++k) result.rows.push_back(row);
  }
  return result;
}

}  // namespace s2g::engine
