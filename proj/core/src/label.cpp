#include "eldef/label.hpp"

namespace eldef {

bool LabelAlgebra::admit(DisjConcept& acc, Concept c) {
    if (++work_ > limits_.max_label_work) {
        truncated_ = true;
        return false;
    }
    if (c.size() > limits_.max_concept_size) {
        truncated_ = true;
        return true;
    }
    if (acc.disjuncts_.size() >= limits_.max_conjuncts && !acc.disjuncts_.count(c)) {
        truncated_ = true;
        return false;
    }
    acc.disjuncts_.insert(std::move(c));
    return true;
}

DisjConcept LabelAlgebra::leaf(const Concept& c) {
    DisjConcept out;
    admit(out, canonicalize(c));
    return out;
}

void LabelAlgebra::unite_into(DisjConcept& acc, const DisjConcept& d) {
    for (const auto& c : d.disjuncts_) {
        if (!admit(acc, c)) return;
    }
}

DisjConcept LabelAlgebra::unite(const DisjConcept& a, const DisjConcept& b) {
    DisjConcept out = a;
    unite_into(out, b);
    return out;
}

DisjConcept LabelAlgebra::product(const DisjConcept& a, const DisjConcept& b) {
    DisjConcept out;
    for (const auto& x : a.disjuncts_) {
        for (const auto& y : b.disjuncts_) {
            if (!admit(out, make_conj(x, y))) return out;
        }
    }
    return out;
}

DisjConcept LabelAlgebra::wrap(const std::string& role, const DisjConcept& d) {
    DisjConcept out;
    for (const auto& c : d.disjuncts_) {
        if (!admit(out, Concept::exists(role, c))) return out;
    }
    return out;
}

LabelExpr LabelExpr::epsilon() { return LabelExpr(std::make_shared<const Node>()); }

LabelExpr LabelExpr::leaf(Concept c) {
    Node n;
    n.kind = Kind::Leaf;
    n.leaf = std::move(c);
    return LabelExpr(std::make_shared<const Node>(std::move(n)));
}

LabelExpr LabelExpr::disj(std::vector<LabelExpr> parts) {
    Node n;
    n.kind = Kind::Or;
    n.parts = std::move(parts);
    return LabelExpr(std::make_shared<const Node>(std::move(n)));
}

LabelExpr LabelExpr::conj(std::vector<LabelExpr> parts) {
    Node n;
    n.kind = Kind::And;
    n.parts = std::move(parts);
    return LabelExpr(std::make_shared<const Node>(std::move(n)));
}

LabelExpr LabelExpr::exists(std::string role, LabelExpr filler) {
    Node n;
    n.kind = Kind::Exists;
    n.role = std::move(role);
    n.parts.push_back(std::move(filler));
    return LabelExpr(std::make_shared<const Node>(std::move(n)));
}

DisjConcept dnf(const LabelExpr& e, LabelAlgebra& algebra) {
    switch (e.kind()) {
        case LabelExpr::Kind::Epsilon: return {};
        case LabelExpr::Kind::Leaf: return algebra.leaf(e.concept_value());
        case LabelExpr::Kind::Exists: return algebra.wrap(e.role(), dnf(e.parts().front(), algebra));
        case LabelExpr::Kind::Or: {
            DisjConcept acc;
            for (const auto& p : e.parts()) algebra.unite_into(acc, dnf(p, algebra));
            return acc;
        }
        case LabelExpr::Kind::And: {
            // An empty conjunction is ⊤.
            DisjConcept acc = algebra.leaf(Concept::top());
            for (const auto& p : e.parts()) {
                acc = algebra.product(acc, dnf(p, algebra));
                if (acc.is_epsilon()) break;
            }
            return acc;
        }
    }
    return {};
}

DisjConcept dnf(const LabelExpr& e) {
    LabelAlgebra algebra;
    return dnf(e, algebra);
}

std::string to_dl_string(const DisjConcept& d) {
    if (d.is_epsilon()) return "ε";
    std::string out;
    for (const auto& c : d.disjuncts()) {
        if (!out.empty()) out += " ⊔ ";
        out += to_dl_string(c);
    }
    return out;
}

}  // namespace eldef
