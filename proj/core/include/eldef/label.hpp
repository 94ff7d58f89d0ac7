// EL⊔ labels kept in disjunctive normal form.
//
// A DisjConcept is a finite set of canonical EL concepts read as their
// disjunction; the empty set is ε. With that reading
//
//   ε ⊔ D = D      ε ⊓ D = ε      ∃r.ε = ε      ∃r.(D ⊔ E) = ∃r.D ⊔ ∃r.E
//
// and ⊓ distributes over ⊔, so union, pairwise product and elementwise
// wrapping are all that is needed.

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "eldef/concept.hpp"

namespace eldef {

struct LabelLimits {
    std::size_t max_conjuncts = 4096;       // disjuncts per label
    std::size_t max_concept_size = 512;     // constructor nodes per disjunct
    std::size_t max_traversal_steps = 200'000;  // (conclusion, context) pairs labelled
    std::size_t max_label_work = 2'000'000;     // disjuncts built across all operations
};

class DisjConcept {
public:
    DisjConcept() = default;
    explicit DisjConcept(Concept c) { disjuncts_.insert(canonicalize(c)); }

    static DisjConcept epsilon() { return {}; }

    bool is_epsilon() const noexcept { return disjuncts_.empty(); }
    std::size_t size() const noexcept { return disjuncts_.size(); }
    const std::set<Concept>& disjuncts() const noexcept { return disjuncts_; }

    friend bool operator==(const DisjConcept&, const DisjConcept&) = default;

private:
    friend class LabelAlgebra;
    std::set<Concept> disjuncts_;
};

// Label operations under a set of caps. Anything dropped to respect a cap
// raises `truncated`.
class LabelAlgebra {
public:
    explicit LabelAlgebra(LabelLimits limits = {}) : limits_(limits) {}

    DisjConcept leaf(const Concept& c);
    void unite_into(DisjConcept& acc, const DisjConcept& d);
    DisjConcept unite(const DisjConcept& a, const DisjConcept& b);
    DisjConcept product(const DisjConcept& a, const DisjConcept& b);
    DisjConcept wrap(const std::string& role, const DisjConcept& d);

    bool truncated() const noexcept { return truncated_; }
    std::size_t work() const noexcept { return work_; }
    const LabelLimits& limits() const noexcept { return limits_; }
    void mark_truncated() noexcept { truncated_ = true; }

private:
    bool admit(DisjConcept& acc, Concept c);

    LabelLimits limits_;
    std::size_t work_ = 0;
    bool truncated_ = false;
};

// EL⊔ expression tree, for building labels symbolically.
class LabelExpr {
public:
    enum class Kind { Epsilon, Leaf, Or, And, Exists };

    static LabelExpr epsilon();
    static LabelExpr leaf(Concept c);
    static LabelExpr disj(std::vector<LabelExpr> parts);
    static LabelExpr conj(std::vector<LabelExpr> parts);
    static LabelExpr exists(std::string role, LabelExpr filler);

    Kind kind() const noexcept { return node_->kind; }
    const Concept& concept_value() const { return node_->leaf; }
    const std::string& role() const { return node_->role; }
    const std::vector<LabelExpr>& parts() const { return node_->parts; }

private:
    struct Node {
        Kind kind = Kind::Epsilon;
        Concept leaf;
        std::string role;
        std::vector<LabelExpr> parts;
    };
    explicit LabelExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

DisjConcept dnf(const LabelExpr& e, LabelAlgebra& algebra);
DisjConcept dnf(const LabelExpr& e);

std::string to_dl_string(const DisjConcept& d);

}  // namespace eldef
