// Consequence-based saturation for EL.
//
// Two rule systems share one log format:
//
//   System A (basic calculus)
//     R_0      C ⊑ C
//     R_top    C ⊑ ⊤
//     R_bot    ⊥ ⊑ C
//     R_sub    C ⊑ E  ⟹  C ⊑ F           for E ⊑ F, E ≡ F or F ≡ E in O
//     R_and-   C ⊑ E1⊓…⊓En  ⟹  C ⊑ Ei
//     R_and+   C ⊑ E1 … C ⊑ En  ⟹  C ⊑ E1⊓…⊓En   (conjunction in universe)
//     R_ex_bot C ⊑ ∃r.E, E ⊑ ⊥  ⟹  C ⊑ ⊥
//     R_ex     C ⊑ ∃r.E, E ⊑ F  ⟹  C ⊑ ∃r.F      (∃r.F in universe)
//
//   System B (tracing calculus)
//     S_0, S_top, S_bot         as above, no premises
//     S_ax      C ⊑ E                          for C ⊑ E in O
//     S_equiv   Cj ⊑ Ck                        Cj, Ck linked by a chain of ≡ axioms
//     S_and-    C1⊓…⊓Cn ⊑ Ci
//     S_ex_bot  ∃r.⊥ ⊑ ⊥
//     S_and+    C ⊑ E1 … C ⊑ En  ⟹  C ⊑ E1⊓…⊓En
//     S_ex      C ⊑ E  ⟹  ∃r.C ⊑ ∃r.E
//     S_chain   C0 ⊑ C1, C1 ⊑ C2  ⟹  C0 ⊑ C2
//
// The universe is the subconcept closure of the ontology and the goals
// (system B additionally registers ∃r.⊥ for every role r under an ∃). All
// side conditions are evaluated against it. System B composes chains
// left-linearly: the second link is always a "step", i.e. a conclusion of
// S_ax, S_equiv, S_and-, S_ex_bot, S_bot or S_ex.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eldef/concept.hpp"
#include "eldef/errors.hpp"
#include "eldef/ontology.hpp"

namespace eldef {

enum class RuleSystem : std::uint8_t { A, B };

enum class Rule : std::uint8_t {
    R0, RTop, RBot, RSub, RAndMinus, RAndPlus, RExistsBot, RExists,
    S0, STop, SBot, SAx, SChain, SEquiv, SAndMinus, SAndPlus, SExistsBot, SExists,
};

std::string_view rule_name(Rule r) noexcept;
RuleSystem rule_system(Rule r) noexcept;

using ConceptId = std::uint32_t;

// Interned canonical concepts; ids follow the concept order.
class Universe {
public:
    Universe() = default;
    explicit Universe(const std::vector<Concept>& sorted_concepts);

    std::size_t size() const noexcept { return concepts_.size(); }
    const Concept& at(ConceptId id) const { return concepts_.at(id); }
    std::optional<ConceptId> find(const Concept& c) const;
    const std::vector<Concept>& concepts() const noexcept { return concepts_; }

    ConceptId top() const noexcept { return top_; }
    ConceptId bottom() const noexcept { return bottom_; }

private:
    std::vector<Concept> concepts_;
    std::unordered_map<Concept, ConceptId, ConceptHash> index_;
    ConceptId top_ = 0;
    ConceptId bottom_ = 0;
};

struct Inclusion {
    ConceptId lhs = 0;
    ConceptId rhs = 0;

    friend auto operator<=>(const Inclusion&, const Inclusion&) = default;
};

struct SideData {
    std::optional<std::size_t> axiom;          // index into the log's ontology
    std::string role;                          // R_ex, R_ex_bot, S_ex
    std::vector<ConceptId> chain;              // S_equiv: C_j … C_k
    std::vector<std::size_t> chain_axioms;     // S_equiv: ≡ axioms along the chain

    friend bool operator==(const SideData&, const SideData&) = default;
};

struct Inference {
    Rule rule = Rule::R0;
    std::vector<Inclusion> premises;
    Inclusion conclusion;
    SideData side;
};

using InferenceId = std::uint32_t;

struct ReasonerLimits {
    std::size_t max_inclusions = 1'000'000;
    std::size_t max_inferences = 10'000'000;
};

namespace detail {
class Saturator;
}

// Result of a saturation run. Immutable after construction.
class InferenceLog {
public:
    RuleSystem system() const noexcept { return system_; }
    const Ontology& ontology() const noexcept { return ontology_; }
    const std::vector<Concept>& goals() const noexcept { return goals_; }
    const Universe& universe() const noexcept { return universe_; }

    std::optional<Inclusion> inclusion(const Concept& lhs, const Concept& rhs) const;

    bool derived(Inclusion i) const { return index_of(i).has_value(); }
    bool derived(const Concept& lhs, const Concept& rhs) const;
    // Derived, or lhs derived unsatisfiable.
    bool entails(Inclusion i) const;
    bool entails(const Concept& lhs, const Concept& rhs) const;

    // Conclusions in derivation order.
    const std::vector<Inclusion>& conclusions() const noexcept { return conclusions_; }
    std::optional<std::size_t> index_of(Inclusion i) const;
    std::span<const InferenceId> producers(std::size_t conclusion_index) const;
    std::span<const InferenceId> producers(Inclusion i) const;

    const Inference& inference(InferenceId id) const { return inferences_.at(id); }
    const std::vector<Inference>& inferences() const noexcept { return inferences_; }

    std::string to_string(Inclusion i) const;

private:
    friend class detail::Saturator;

    RuleSystem system_ = RuleSystem::A;
    Ontology ontology_;
    std::vector<Concept> goals_;
    Universe universe_;
    std::vector<Inclusion> conclusions_;
    std::unordered_map<std::uint64_t, std::uint32_t> conclusion_index_;
    std::vector<std::vector<InferenceId>> producers_;
    std::vector<Inference> inferences_;
};

// Saturates o over subconcept_closure(o, goals). Throws ResourceLimitError
// when a cap is exceeded.
InferenceLog saturate(const Ontology& o, const std::vector<Concept>& goals, RuleSystem system,
                      const ReasonerLimits& limits = {});

// O ⊨ query. For EquivalentClasses both directions are checked.
bool entails(const Ontology& o, const Axiom& query, RuleSystem system, const ReasonerLimits& limits = {});

// ---------------------------------------------------------------------------
// Proofs

// One inference of a proof with concepts resolved, so a proof outlives its log.
struct ProofStep {
    Rule rule = Rule::R0;
    Concept lhs;
    Concept rhs;
    std::vector<std::size_t> premises;   // indices of earlier steps
    std::optional<Axiom> axiom;          // R_sub / S_ax
    std::vector<Axiom> chain_axioms;     // S_equiv
    std::string role;
};

// Topologically ordered: every premise is produced by exactly one earlier
// step, and the last step concludes the goal.
struct Proof {
    std::vector<ProofStep> steps;
    const ProofStep& goal() const { return steps.back(); }
};

struct ProofLimits {
    std::size_t max_proofs = 100'000;
    std::size_t max_search_steps = 10'000'000;
};

struct ProofCount {
    std::size_t proofs = 0;
    bool complete = true;   // false if a cap stopped the search
};

// Enumerates acyclic proofs of `goal` in a deterministic order. The callback
// returns false to stop early, which leaves `complete` set.
ProofCount for_each_proof(const InferenceLog& log, Inclusion goal, const ProofLimits& limits,
                           const std::function<bool(const Proof&)>& visit);
std::vector<Proof> proofs(const InferenceLog& log, Inclusion goal, const ProofLimits& limits = {});

// Indented tree, one inference per line: "rule: conclusion  [axiom]".
std::string render_proof(const Proof& proof);

// Checks, on a system A log, that every conclusion C ⊑ E either comes from
// R_top/R_bot/R_ex_bot or has E occurring in C, in the ontology or in a goal.
// Returns human-readable descriptions of violations.
std::vector<std::string> star_property_violations(const InferenceLog& log);

}  // namespace eldef
