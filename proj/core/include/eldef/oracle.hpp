// Independent ground truth for the reasoner and the definability pipeline:
// finite-model semantics, a canonical-model entailment check and exhaustive
// search for Σ-definitions. Shares no code with the rule engines.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eldef/concept.hpp"
#include "eldef/ontology.hpp"

namespace eldef::oracle {

using Extension = std::vector<bool>;   // indexed by element id

// Elements are 0..size-1. Unmapped names have empty extensions.
struct Interpretation {
    std::size_t size = 0;
    std::map<std::string, Extension> concepts;
    std::map<std::string, std::set<std::pair<std::uint32_t, std::uint32_t>>> roles;

    bool has(const std::string& concept_name, std::uint32_t x) const;
};

Extension eval_concept(const Interpretation& i, const Concept& c);
bool is_model(const Interpretation& i, const Ontology& o);

// One element per concept of the closure of O and the goals, completed by a
// naive chase. O ⊨ C ⊑ E iff x_C is inconsistent or x_C ∈ E^I, for C in the
// closure and any E.
class CanonicalModel {
public:
    CanonicalModel(const Ontology& o, const std::vector<Concept>& goals);

    const Interpretation& interpretation() const noexcept { return interp_; }
    const std::vector<Concept>& elements() const noexcept { return elements_; }
    std::optional<std::uint32_t> element_of(const Concept& c) const;
    bool inconsistent(std::uint32_t x) const { return inconsistent_.at(x); }

    // Requires canonicalize(c) in the closure.
    bool entails(const Concept& c, const Concept& e) const;

    // Every axiom holds at every consistent element.
    bool self_consistent(const Ontology& o) const;

private:
    void require(std::uint32_t x, const Concept& c, bool& changed);

    Interpretation interp_;
    std::vector<Concept> elements_;
    std::map<Concept, std::uint32_t> index_;
    std::vector<bool> inconsistent_;
};

CanonicalModel canonical_model(const Ontology& o, const std::vector<Concept>& goals);

// Leaves (⊤, ⊥, names) and ∃ nodes count 1 each; ⊓ nodes are free, so
// D ⊓ ∃r.D weighs 3.
std::size_t enumeration_weight(const Concept& c);

// Every canonical concept over Σ with ∃-depth ≤ max_depth and weight ≤
// max_size, each once. ⊥ appears only on its own: conjunctions with ⊥ and
// ∃r.⊥ are equivalent to ⊥ and skipped. Ordered by (weight, concept order).
std::vector<Concept> enumerate_sigma_concepts(const Signature& sigma, std::size_t max_depth, std::size_t max_size);

// Enumerated Σ-concepts d with O ⊨ C ≡ d, decided by canonical models.
std::set<Concept> brute_force_define(const Ontology& o, const Concept& c, const Signature& sigma,
                                     std::size_t max_depth, std::size_t max_size);

// Domain of 1–4 elements; every name and role filled with probability ½ per
// element or pair.
Interpretation random_interpretation(const Signature& sig, std::mt19937_64& rng, double density = 0.5);

// A random interpretation repaired into a model of O by a monotone chase
// (names are added, missing ∃-successors are drawn from the domain). Returns
// nullopt if no attempt avoided ⊥.
std::optional<Interpretation> sample_model(const Ontology& o, const Signature& extra, std::mt19937_64& rng,
                                           std::size_t attempts = 40);

}  // namespace eldef::oracle
