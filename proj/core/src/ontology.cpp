#include "eldef/ontology.hpp"

#include <algorithm>

namespace eldef {

bool is_valid_symbol_name(std::string_view name) {
    return !name.empty() && name.find(kReservedChar) == std::string_view::npos;
}

bool Signature::includes(const Signature& other) const {
    return std::includes(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Signature Signature::intersect(const Signature& other) const {
    std::set<Symbol> out;
    std::set_intersection(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                          std::inserter(out, out.end()));
    return Signature(std::move(out));
}

Signature Signature::minus(const Signature& other) const {
    std::set<Symbol> out;
    std::set_difference(symbols_.begin(), symbols_.end(), other.symbols_.begin(), other.symbols_.end(),
                        std::inserter(out, out.end()));
    return Signature(std::move(out));
}

Axiom canonicalize(const Axiom& a) { return {a.kind, canonicalize(a.lhs), canonicalize(a.rhs)}; }

Ontology::Ontology(const std::vector<Axiom>& axioms) {
    for (const auto& a : axioms) add(a);
}

bool Ontology::add(const Axiom& axiom) {
    Axiom c = canonicalize(axiom);
    if (std::find(axioms_.begin(), axioms_.end(), c) != axioms_.end()) return false;
    axioms_.push_back(std::move(c));
    return true;
}

void Ontology::add_all(const Ontology& other) {
    for (const auto& a : other.axioms()) add(a);
}

namespace {

void collect_signature(const Concept& c, Signature& sig) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
            break;
        case ConceptKind::Name:
            sig.insert(Symbol::concept_name(c.symbol()));
            break;
        case ConceptKind::Exists:
            sig.insert(Symbol::role(c.symbol()));
            collect_signature(c.filler(), sig);
            break;
        case ConceptKind::Conj:
            for (const auto& op : c.operands()) collect_signature(op, sig);
            break;
    }
}

}  // namespace

Signature signature_of(const Concept& c) {
    Signature sig;
    collect_signature(c, sig);
    return sig;
}

Signature signature_of(const Axiom& a) {
    Signature sig;
    collect_signature(a.lhs, sig);
    collect_signature(a.rhs, sig);
    return sig;
}

Signature signature_of(const Ontology& o) {
    Signature sig;
    for (const auto& a : o.axioms()) {
        collect_signature(a.lhs, sig);
        collect_signature(a.rhs, sig);
    }
    return sig;
}

std::set<Concept> subconcept_closure(const Ontology& o, const std::vector<Concept>& extra) {
    std::vector<Concept> all{Concept::top(), Concept::bottom()};
    for (const auto& a : o.axioms()) {
        collect_subconcepts(canonicalize(a.lhs), all);
        collect_subconcepts(canonicalize(a.rhs), all);
    }
    for (const auto& c : extra) collect_subconcepts(canonicalize(c), all);
    return {all.begin(), all.end()};
}

}  // namespace eldef
