// Σ-definability of EL concepts.
//
// C is Σ-definable wrt O iff O ∪ O* ⊨ C ⊑ C*, where O*, C* rename every
// symbol outside Σ to a fresh copy. Definitions are read off labels of the
// system B inference log for C ⊑ C*.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eldef/concept.hpp"
#include "eldef/errors.hpp"
#include "eldef/label.hpp"
#include "eldef/ontology.hpp"
#include "eldef/reasoner.hpp"

namespace eldef {

class RenameMap {
public:
    RenameMap() = default;
    RenameMap(const Signature& symbols, const Signature& sigma);

    const Signature& sigma() const noexcept { return sigma_; }
    const std::map<Symbol, Symbol>& forward() const noexcept { return forward_; }

    Symbol apply(const Symbol& s) const;
    Concept apply(const Concept& c) const;
    Axiom apply(const Axiom& a) const;
    Ontology apply(const Ontology& o) const;

    // Inverse on renamed symbols; identity elsewhere.
    Concept restore(const Concept& c) const;

    static std::string fresh_name(const std::string& name) { return name + kReservedChar + "c"; }

private:
    Signature sigma_;
    std::map<Symbol, Symbol> forward_;
    std::map<Symbol, Symbol> inverse_;
};

struct SignatureCopy {
    Ontology ontology;   // O*
    Concept concept_copy;     // C*
    RenameMap map;
};

SignatureCopy rename_copy(const Ontology& o, const Concept& c, const Signature& sigma);

// O ∪ O* ⊨ C ⊑ C* decided by the given rule system.
bool is_definable(const Ontology& o, const Concept& c, const Signature& sigma,
                  RuleSystem system = RuleSystem::A, const ReasonerLimits& limits = {});

struct LabelStats {
    std::size_t nodes = 0;            // (conclusion, context) pairs labelled
    std::size_t inferences = 0;       // inferences combined
    std::size_t max_label_size = 0;   // disjuncts in the largest label
};

struct LabelResult {
    DisjConcept label;
    bool truncated = false;
    LabelStats stats;
};

// Label of `goal` in a system B log: the union of the labels the L-rules
// give along every derivation tree of `goal` in which no conclusion occurs
// below itself. Leaves outside `sigma` are ε. Below a conclusion whose lhs
// is unsatisfiable, premise-free derivations plus the first derivation with a
// non-ε label are followed.
LabelResult compute_labels(const InferenceLog& log, Inclusion goal, const Signature& sigma,
                           const LabelLimits& limits = {});

// Interpolant read off a single system A proof of C1 ⊑ C2 from O1 ∪ O2, where
// sig1/sig2 are the signatures of O1/O2 (with C1/C2). Throws
// NotExtractableError when a case's signature condition fails.
Concept interpolant_from_proof(const Proof& proof, const Signature& sigma, const Signature& sig1,
                               const Signature& sig2);

struct DefineOptions {
    LabelLimits labels;
    ReasonerLimits reasoner;
    std::size_t max_definitions = static_cast<std::size_t>(-1);
    bool semantic_dedup = false;
};

struct DefineStats {
    std::size_t conclusions = 0;
    std::size_t inferences = 0;
    std::size_t candidates = 0;
    LabelStats labels;
};

struct DefinitionResult {
    bool definable = false;
    std::vector<Concept> definitions;   // canonical, sorted by (size, text)
    bool truncated = false;
    DefineStats stats;
};

// Throws ResourceLimitError if truncation left no definitions, SoundnessError
// if a candidate fails verification.
DefinitionResult define(const Ontology& o, const Concept& c, const Signature& sigma,
                        const DefineOptions& options = {});

struct FamilyInstance {
    Ontology ontology;
    Concept target;
    Signature sigma;
};

// A_0 ≡ ∃r.A_1 ⊓ ∃s.A_1, …, A_{n-1} ≡ ∃r.A_n ⊓ ∃s.A_n, A_n ≡ D_1, A_n ≡ D_2
// with target A_0 and Σ = {r, s, D_1, D_2}.
FamilyInstance generate_family(std::size_t n);

}  // namespace eldef
