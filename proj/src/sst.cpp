// SPDX-License-Identifier: Apache-2.0

#include "s2g/sst.hpp"

namespace s2g {

const char* sst_tag_name(SstTag tag) {
  switch (tag) {
    case SstTag::Lv: return "Lv";
    case SstTag::Le: return "Le";
    case SstTag::Pv1: return "Pv1";
    case SstTag::Pe1: return "Pe1";
    case SstTag::Pv2: return "Pv2";
    case SstTag::Pe2: return "Pe2";
    case SstTag::Eout: return "Eout";
    case SstTag::Ein: return "Ein";
  }
  return "?";
}

PropertyValue term_to_value(const RdfTerm& term) {
  if (term.kind() == TermKind::Number) {
    return PropertyValue::number(term.numeric_value());
  }
  return PropertyValue::string(term.lexical());
}

namespace {

std::string describe(const sparql::TriplePattern& p) {
  return p.predicate.to_ntriples();
}

}  // namespace

SstCase classify(const sparql::TriplePattern& pattern,
                 const PrefixRegistry& registry) {
  const std::string predicate(local_name(pattern.predicate.lexical()));
  const bool variable_object = sparql::is_variable(pattern.object);
  const RdfTerm* constant =
      variable_object ? nullptr : &std::get<RdfTerm>(pattern.object);

  SstCase c;
  c.start = pattern.subject;
  c.end = pattern.object;

  if (predicate == registry.vertex_label_key ||
      predicate == registry.edge_label_key) {
    if (variable_object) {
      throw ClassificationError("label pattern " + describe(pattern) +
                                " needs a constant label");
    }
    if (constant->is_iri()) {
      throw ClassificationError("label pattern " + describe(pattern) +
                                " needs a literal label, not an IRI");
    }
    c.tag = predicate == registry.vertex_label_key ? SstTag::Lv : SstTag::Le;
    c.key = term_to_value(*constant).text();
    return c;
  }
  if (predicate.starts_with(registry.vertex_prefix)) {
    c.key = predicate.substr(registry.vertex_prefix.size());
    if (!variable_object && constant->is_iri()) {
      throw ClassificationError("vertex property " + describe(pattern) +
                                " cannot take an IRI object");
    }
    c.tag = variable_object ? SstTag::Pv2 : SstTag::Pv1;
    return c;
  }
  if (predicate.starts_with(registry.edge_prefix)) {
    c.key = predicate.substr(registry.edge_prefix.size());
    if (variable_object) {
      c.tag = registry.edge_property_keys.count(c.key) ? SstTag::Pe2
                                                        : SstTag::Eout;
    } else {
      c.tag = constant->is_iri() ? SstTag::Eout : SstTag::Pe1;
    }
    return c;
  }
  throw ClassificationError("predicate " + describe(pattern) +
                            " carries no registered prefix marker");
}

SstCase reverse_edge(const SstCase& c) {
  if (c.tag != SstTag::Eout) return c;
  return SstCase{SstTag::Ein, c.key, c.end, c.start};
}

SstInstruction map_to_instruction(const SstCase& c) {
  const auto* start = std::get_if<sparql::Variable>(&c.start);
  if (start == nullptr) {
    throw Error(std::string(sst_tag_name(c.tag)) +
                " case must start at a variable");
  }
  SstInstruction ins;
  ins.start = start->name;
  auto end_variable = [&]() -> std::string {
    const auto* end = std::get_if<sparql::Variable>(&c.end);
    if (end == nullptr) {
      throw Error(std::string(sst_tag_name(c.tag)) +
                  " case must end at a variable");
    }
    return end->name;
  };
  switch (c.tag) {
    case SstTag::Lv:
    case SstTag::Le:
      ins.core = HasLabelStep{c.key};
      break;
    case SstTag::Pv1:
    case SstTag::Pe1:
      ins.core = HasStep{c.key, term_to_value(std::get<RdfTerm>(c.end))};
      break;
    case SstTag::Pv2:
    case SstTag::Pe2:
      ins.core = PropertiesStep{c.key};
      ins.end = end_variable();
      break;
    case SstTag::Eout:
      ins.core = VertexStep{Direction::Out, c.key};
      ins.end = end_variable();
      break;
    case SstTag::Ein:
      ins.core = VertexStep{Direction::In, c.key};
      ins.end = end_variable();
      break;
  }
  return ins;
}

}  // namespace s2g
