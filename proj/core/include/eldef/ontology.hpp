// Symbols, signatures, axioms and ontologies.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "eldef/concept.hpp"

namespace eldef {

enum class SymbolKind : std::uint8_t { ConceptName, RoleName };

struct Symbol {
    SymbolKind kind = SymbolKind::ConceptName;
    std::string name;

    static Symbol concept_name(std::string n) { return {SymbolKind::ConceptName, std::move(n)}; }
    static Symbol role(std::string n) { return {SymbolKind::RoleName, std::move(n)}; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Input symbol names must not contain this character; fresh copies append
// "@c" to the original name.
inline constexpr char kReservedChar = '@';

bool is_valid_symbol_name(std::string_view name);

// A finite set of concept and role names. ⊤ and ⊥ are constructors, not
// symbols, so they never appear here.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Signature(std::set<Symbol> symbols) : symbols_(std::move(symbols)) {}

    void insert(Symbol s) { symbols_.insert(std::move(s)); }
    void insert(const Signature& other) { symbols_.insert(other.symbols_.begin(), other.symbols_.end()); }
    void erase(const Symbol& s) { symbols_.erase(s); }

    bool contains(const Symbol& s) const { return symbols_.count(s) != 0; }
    bool contains_concept(const std::string& n) const { return contains(Symbol::concept_name(n)); }
    bool contains_role(const std::string& n) const { return contains(Symbol::role(n)); }
    // True iff every symbol of `other` is in this signature.
    bool includes(const Signature& other) const;

    bool empty() const noexcept { return symbols_.empty(); }
    std::size_t size() const noexcept { return symbols_.size(); }
    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }
    const std::set<Symbol>& symbols() const noexcept { return symbols_; }

    Signature intersect(const Signature& other) const;
    Signature minus(const Signature& other) const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::set<Symbol> symbols_;
};

enum class AxiomKind : std::uint8_t { SubClassOf, EquivalentClasses };

struct Axiom {
    AxiomKind kind = AxiomKind::SubClassOf;
    Concept lhs;
    Concept rhs;

    static Axiom sub(Concept l, Concept r) { return {AxiomKind::SubClassOf, std::move(l), std::move(r)}; }
    static Axiom equiv(Concept l, Concept r) { return {AxiomKind::EquivalentClasses, std::move(l), std::move(r)}; }

    friend bool operator==(const Axiom&, const Axiom&) = default;
};

Axiom canonicalize(const Axiom& a);

// Ordered, duplicate-free list of canonical axioms.
class Ontology {
public:
    Ontology() = default;
    explicit Ontology(const std::vector<Axiom>& axioms);

    // Returns false if the (canonicalized) axiom was already present.
    bool add(const Axiom& axiom);
    void add_all(const Ontology& other);

    const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
    std::size_t size() const noexcept { return axioms_.size(); }
    bool empty() const noexcept { return axioms_.empty(); }

    friend bool operator==(const Ontology&, const Ontology&) = default;

private:
    std::vector<Axiom> axioms_;
};

Signature signature_of(const Concept& c);
Signature signature_of(const Axiom& a);
Signature signature_of(const Ontology& o);

// Every subconcept of every axiom side and every extra concept, in canonical
// form, plus ⊤ and ⊥.
std::set<Concept> subconcept_closure(const Ontology& o, const std::vector<Concept>& extra);

}  // namespace eldef
