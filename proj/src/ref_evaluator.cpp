// SPDX-License-Identifier: Apache-2.0

#include "s2g/ref_evaluator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "s2g/number.hpp"

namespace s2g {

namespace {

using sparql::CompareOp;
using sparql::FilterExpr;
using sparql::GroupPattern;
using sparql::Node;
using sparql::Variable;

using Solution = std::map<std::string, RdfTerm>;
using Solutions = std::vector<Solution>;

const RdfTerm* lookup(const Solution& s, const std::string& name) {
  auto it = s.find(name);
  return it == s.end() ? nullptr : &it->second;
}

bool compatible(const Solution& a, const Solution& b) {
  for (const auto& [k, v] : b) {
    const RdfTerm* have = lookup(a, k);
    if (have && !(*have == v)) return false;
  }
  return true;
}

Solution merge(Solution a, const Solution& b) {
  for (const auto& [k, v] : b) a.emplace(k, v);
  return a;
}

// Binds `node` against `term`; false on conflict.
bool unify(const Node& node, const RdfTerm& term, Solution& s) {
  if (const auto* v = std::get_if<Variable>(&node)) {
    if (const RdfTerm* have = lookup(s, v->name)) return *have == term;
    s.emplace(v->name, term);
    return true;
  }
  return std::get<RdfTerm>(node) == term;
}

// ---- filters

std::string describe(const RdfTerm& t) {
  switch (t.kind()) {
    case TermKind::Iri: return "IRI " + t.to_ntriples();
    case TermKind::String: return "string \"" + t.lexical() + "\"";
    case TermKind::Number: return "number " + canonical_number(t.numeric_value());
  }
  return {};
}

bool holds(CompareOp op, int cmp) {
  switch (op) {
    case CompareOp::Eq: return cmp == 0;
    case CompareOp::Ne: return cmp != 0;
    case CompareOp::Lt: return cmp < 0;
    case CompareOp::Le: return cmp <= 0;
    case CompareOp::Gt: return cmp > 0;
    case CompareOp::Ge: return cmp >= 0;
  }
  return false;
}

bool compare_terms(const RdfTerm& a, const RdfTerm& b, CompareOp op) {
  if (a.kind() != b.kind()) {
    throw TypeError("cannot compare " + describe(a) + " with " + describe(b));
  }
  if (a.is_iri()) {
    if (op != CompareOp::Eq && op != CompareOp::Ne) {
      throw TypeError(std::string("ordering comparison '") +
                      sparql::compare_op_symbol(op) + "' on IRIs");
    }
    return (a.lexical() == b.lexical()) == (op == CompareOp::Eq);
  }
  int cmp = 0;
  if (a.kind() == TermKind::Number) {
    double x = a.numeric_value();
    double y = b.numeric_value();
    cmp = x < y ? -1 : (y < x ? 1 : 0);
  } else {
    cmp = a.lexical() < b.lexical() ? -1 : (b.lexical() < a.lexical() ? 1 : 0);
  }
  return holds(op, cmp);
}

bool eval_filter(const FilterExpr& f, const Solution& s) {
  switch (f.kind) {
    case FilterExpr::Kind::And:
      return eval_filter(f.operands[0], s) && eval_filter(f.operands[1], s);
    case FilterExpr::Kind::Or:
      return eval_filter(f.operands[0], s) || eval_filter(f.operands[1], s);
    case FilterExpr::Kind::Compare:
      break;
  }
  const RdfTerm* lhs = lookup(s, f.lhs.name);
  if (lhs == nullptr) return false;
  const RdfTerm* rhs = nullptr;
  if (const auto* v = std::get_if<Variable>(&f.rhs)) {
    rhs = lookup(s, v->name);
    if (rhs == nullptr) return false;
  } else {
    rhs = &std::get<RdfTerm>(f.rhs);
  }
  return compare_terms(*lhs, *rhs, f.op);
}

// ---- graph patterns

class Evaluator {
 public:
  explicit Evaluator(const RdfGraph& graph) {
    for (const auto& t : graph.triples()) {
      by_predicate_[t.predicate.lexical()].push_back(&t);
      by_subject_[key(t.predicate, t.subject)].push_back(&t);
      by_object_[key(t.predicate, t.object)].push_back(&t);
    }
  }

  // Extends each seed row with the group's solutions.
  Solutions group(const GroupPattern& g, Solutions rows) {
    for (const auto& tp : g.patterns) {
      Solutions next;
      auto bucket = by_predicate_.find(tp.predicate.lexical());
      if (bucket == by_predicate_.end()) {
        rows.clear();
        continue;
      }
      for (const auto& row : rows) {
        for (const Triple* triple : candidates(tp, row, bucket->second)) {
          Solution s = row;
          if (unify(tp.subject, triple->subject, s) &&
              unify(tp.object, triple->object, s)) {
            next.push_back(std::move(s));
          }
        }
      }
      rows = std::move(next);
    }
    for (const auto& u : g.unions) {
      Solutions branches;
      for (const auto& b : u.branches) {
        for (auto& s : group(b, {Solution{}})) branches.push_back(std::move(s));
      }
      Solutions next;
      for (const auto& row : rows) {
        for (const auto& s : branches) {
          if (compatible(row, s)) next.push_back(merge(row, s));
        }
      }
      rows = std::move(next);
    }
    if (!g.filters.empty()) {
      Solutions kept;
      for (auto& row : rows) {
        bool ok = true;
        for (const auto& f : g.filters) {
          if (!eval_filter(f, row)) {
            ok = false;
            break;
          }
        }
        if (ok) kept.push_back(std::move(row));
      }
      rows = std::move(kept);
    }
    for (const auto& opt : g.optionals) {
      Solutions next;
      for (const auto& row : rows) {
        Solutions ext = group(opt, {row});
        if (ext.empty()) {
          next.push_back(row);
        } else {
          for (auto& s : ext) next.push_back(std::move(s));
        }
      }
      rows = std::move(next);
    }
    return rows;
  }

 private:
  using Bucket = std::vector<const Triple*>;

  static std::string key(const RdfTerm& predicate, const RdfTerm& term) {
    return predicate.lexical() + '\x1f' + term.to_ntriples();
  }

  static const RdfTerm* bound(const Node& node, const Solution& row) {
    if (const auto* v = std::get_if<Variable>(&node)) return lookup(row, v->name);
    return &std::get<RdfTerm>(node);
  }

  // Narrows the predicate bucket by a bound subject or object.
  const Bucket& candidates(const sparql::TriplePattern& tp, const Solution& row,
                           const Bucket& all) const {
    static const Bucket kNone;
    const std::unordered_map<std::string, Bucket>* index = &by_subject_;
    const RdfTerm* term = bound(tp.subject, row);
    if (term == nullptr) {
      index = &by_object_;
      term = bound(tp.object, row);
    }
    if (term == nullptr) return all;
    auto it = index->find(key(tp.predicate, *term));
    return it == index->end() ? kNone : it->second;
  }

  // Each bucket keeps graph order.
  std::map<std::string, Bucket> by_predicate_;
  std::unordered_map<std::string, Bucket> by_subject_;
  std::unordered_map<std::string, Bucket> by_object_;
};

// ---- solution modifiers

int term_rank(const RdfTerm* t) {
  if (t == nullptr) return 0;
  switch (t->kind()) {
    case TermKind::Number: return 1;
    case TermKind::String: return 2;
    case TermKind::Iri: return 3;
  }
  return 4;
}

int order_terms(const RdfTerm* a, const RdfTerm* b) {
  int ra = term_rank(a);
  int rb = term_rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra == 0) return 0;
  if (ra == 1) {
    double x = a->numeric_value();
    double y = b->numeric_value();
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  return a->lexical() < b->lexical() ? -1 : (b->lexical() < a->lexical() ? 1 : 0);
}

void sort_by_key(Solutions& rows, const std::string& key) {
  std::stable_sort(rows.begin(), rows.end(), [&](const Solution& a, const Solution& b) {
    return order_terms(lookup(a, key), lookup(b, key)) < 0;
  });
}

using KeyTuple = std::vector<std::optional<RdfTerm>>;

KeyTuple key_of(const Solution& s, const std::vector<std::string>& keys) {
  KeyTuple out;
  for (const auto& k : keys) {
    const RdfTerm* t = lookup(s, k);
    out.push_back(t ? std::optional<RdfTerm>(*t) : std::nullopt);
  }
  return out;
}

void dedup(Solutions& rows, const std::vector<std::string>& keys) {
  std::set<KeyTuple> seen;
  Solutions kept;
  for (auto& row : rows) {
    if (seen.insert(key_of(row, keys)).second) kept.push_back(std::move(row));
  }
  rows = std::move(kept);
}

}  // namespace

SolutionMultiset ref_evaluate(const sparql::SelectQuery& query,
                              const RdfGraph& graph) {
  sparql::check_scoping(query);
  Solutions rows = Evaluator(graph).group(query.where, {Solution{}});

  std::vector<std::string> columns;
  const sparql::CountAggregate* count = nullptr;
  for (const auto& item : query.projection) {
    columns.push_back(sparql::column_name(item));
    if (const auto* c = std::get_if<sparql::CountAggregate>(&item)) count = c;
  }

  if (count == nullptr) {
    if (query.group_by) sort_by_key(rows, query.group_by->name);
  } else if (!query.group_by) {
    if (count->distinct) dedup(rows, {count->argument.name});
    std::int64_t n = 0;
    for (const auto& row : rows) n += lookup(row, count->argument.name) ? 1 : 0;
    rows = {Solution{{count->alias.name, RdfTerm::number(static_cast<double>(n))}}};
  } else {
    const std::string& key = query.group_by->name;
    const std::string& arg = count->argument.name;
    if (count->distinct) dedup(rows, {key, arg});
    sort_by_key(rows, key);
    Solutions grouped;
    for (std::size_t i = 0; i < rows.size();) {
      const RdfTerm* k = lookup(rows[i], key);
      std::int64_t n = 0;
      std::size_t j = i;
      for (; j < rows.size() && order_terms(k, lookup(rows[j], key)) == 0; ++j) {
        n += lookup(rows[j], arg) ? 1 : 0;
      }
      Solution s;
      if (k) s.emplace(key, *k);
      s.emplace(count->alias.name, RdfTerm::number(static_cast<double>(n)));
      grouped.push_back(std::move(s));
      i = j;
    }
    rows = std::move(grouped);
  }

  if (!query.order_by.empty()) {
    std::stable_sort(rows.begin(), rows.end(), [&](const Solution& a, const Solution& b) {
      for (const auto& key : query.order_by) {
        int c = order_terms(lookup(a, key.variable.name), lookup(b, key.variable.name));
        if (c != 0) return key.direction == sparql::SortDirection::Asc ? c < 0 : c > 0;
      }
      for (const auto& col : columns) {
        int c = order_terms(lookup(a, col), lookup(b, col));
        if (c != 0) return c < 0;
      }
      return false;
    });
  }
  if (query.distinct) dedup(rows, columns);
  if (query.limit || query.offset) {
    auto low = static_cast<std::size_t>(query.offset.value_or(0));
    std::size_t high = rows.size();
    if (query.limit) high = std::min(high, low + static_cast<std::size_t>(*query.limit));
    if (low >= rows.size()) {
      rows.clear();
    } else {
      rows = Solutions(rows.begin() + static_cast<std::ptrdiff_t>(low),
                       rows.begin() + static_cast<std::ptrdiff_t>(high));
    }
  }

  SolutionMultiset result;
  result.columns = columns;
  for (const auto& row : rows) {
    Row out;
    for (const auto& col : columns) {
      const RdfTerm* t = lookup(row, col);
      if (t) {
        out.emplace_back(*t);
      } else {
        out.emplace_back(Unbound{});
      }
    }
    result.rows.push_back(std::move(out));
  }
  return result;
}

SolutionMultiset normalize(const SolutionMultiset& rows,
                           const PrefixRegistry& registry,
                           const PropertyGraph* graph) {
  SolutionMultiset out;
  out.columns = rows.columns;
  auto quoted = [](const std::string& s) {
    return PropertyValue::string(nlohmann::json(s).dump());
  };
  auto iri_key = [](std::string_view iri) {
    return PropertyValue::string("<" + std::string(local_name(iri)) + ">");
  };
  for (std::size_t r = 0; r < rows.rows.size(); ++r) {
    Row row;
    for (const auto& cell : rows.rows[r]) {
      std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Unbound>) {
              row.emplace_back(Unbound{});
            } else if constexpr (std::is_same_v<T, RdfTerm>) {
              if (x.is_iri()) {
                row.emplace_back(iri_key(x.lexical()));
              } else if (x.kind() == TermKind::Number) {
                row.emplace_back(PropertyValue::string(canonical_number(x.numeric_value())));
              } else {
                row.emplace_back(quoted(x.lexical()));
              }
            } else if constexpr (std::is_same_v<T, PropertyValue>) {
              row.emplace_back(x.is_number() ? PropertyValue::string(x.text())
                                             : quoted(x.as_string()));
            } else {
              const std::string where = "row " + std::to_string(r + 1) + ": ";
              if (x.kind == ElementKind::Edge) {
                throw NormalizationError(where + "edge " + std::to_string(x.id) +
                                         " has no RDF counterpart");
              }
              if (graph == nullptr) {
                throw NormalizationError(where + "vertex " + std::to_string(x.id) +
                                         " needs a graph to resolve");
              }
              const PropertyValue* id =
                  registry.id_key.empty() ? nullptr : graph->property(x, registry.id_key);
              if (id == nullptr) {
                throw NormalizationError(where + "vertex " + std::to_string(x.id) +
                                         " has no '" + registry.id_key + "' property");
              }
              row.emplace_back(iri_key(id->text()));
            }
          },
          cell);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace s2g
