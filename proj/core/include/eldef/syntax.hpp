// Textual format: a strict subset of OWL 2 functional-style syntax.
//
//   Ontology   ::= 'Ontology(' Axiom* ')'
//   Axiom      ::= 'SubClassOf(' Concept Concept ')'
//                | 'EquivalentClasses(' Concept Concept ')'
//   Concept    ::= 'owl:Thing' | 'owl:Nothing' | NAME
//                | 'ObjectIntersectionOf(' Concept Concept+ ')'
//                | 'ObjectSomeValuesFrom(' NAME Concept ')'
//   NAME       ::= [A-Za-z0-9_.-]+
//
// Whitespace is insignificant; '#' starts a comment running to end of line.
// No prefixes, IRIs or declarations. Errors are reported as ParseError with
// a 1-based line/column.

#pragma once

#include <string>
#include <string_view>

#include "eldef/errors.hpp"
#include "eldef/ontology.hpp"

namespace eldef {

Ontology parse_ontology(std::string_view text);
Concept parse_concept(std::string_view text);
Axiom parse_axiom(std::string_view text);

// Deterministic rendering of the canonical form.
std::string serialize(const Concept& c);
std::string serialize(const Axiom& a);
// One axiom per line, two-space indent, trailing newline.
std::string serialize(const Ontology& o);

}  // namespace eldef
