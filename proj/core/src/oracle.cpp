#include "eldef/oracle.hpp"

#include <algorithm>
#include <functional>

namespace eldef::oracle {

bool Interpretation::has(const std::string& concept_name, std::uint32_t x) const {
    auto it = concepts.find(concept_name);
    return it != concepts.end() && it->second.at(x);
}

Extension eval_concept(const Interpretation& i, const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top: return Extension(i.size, true);
        case ConceptKind::Bottom: return Extension(i.size, false);
        case ConceptKind::Name: {
            auto it = i.concepts.find(c.symbol());
            if (it == i.concepts.end()) return Extension(i.size, false);
            return it->second;
        }
        case ConceptKind::Conj: {
            Extension out(i.size, true);
            for (const auto& op : c.operands()) {
                Extension e = eval_concept(i, op);
                for (std::size_t x = 0; x < i.size; ++x) out[x] = out[x] && e[x];
            }
            return out;
        }
        case ConceptKind::Exists: {
            Extension out(i.size, false);
            auto it = i.roles.find(c.symbol());
            if (it == i.roles.end()) return out;
            Extension f = eval_concept(i, c.filler());
            for (const auto& [x, y] : it->second) {
                if (f[y]) out[x] = true;
            }
            return out;
        }
    }
    return Extension(i.size, false);
}

namespace {

bool subset(const Extension& a, const Extension& b) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] && !b[x]) return false;
    }
    return true;
}

// Both directions of an equivalence, one direction of an inclusion.
std::vector<std::pair<Concept, Concept>> directed(const Ontology& o) {
    std::vector<std::pair<Concept, Concept>> out;
    for (const auto& a : o.axioms()) {
        out.emplace_back(a.lhs, a.rhs);
        if (a.kind == AxiomKind::EquivalentClasses) out.emplace_back(a.rhs, a.lhs);
    }
    return out;
}

}  // namespace

bool is_model(const Interpretation& i, const Ontology& o) {
    for (const auto& [lhs, rhs] : directed(o)) {
        if (!subset(eval_concept(i, lhs), eval_concept(i, rhs))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

CanonicalModel::CanonicalModel(const Ontology& o, const std::vector<Concept>& goals) {
    std::set<Concept> closure = subconcept_closure(o, goals);
    elements_.assign(closure.begin(), closure.end());
    for (std::uint32_t x = 0; x < elements_.size(); ++x) index_.emplace(elements_[x], x);
    interp_.size = elements_.size();
    inconsistent_.assign(elements_.size(), false);

    bool changed = false;
    for (std::uint32_t x = 0; x < elements_.size(); ++x) require(x, elements_[x], changed);

    const auto axioms = directed(o);
    do {
        changed = false;
        for (const auto& [lhs, rhs] : axioms) {
            Extension l = eval_concept(interp_, lhs);
            Extension r = eval_concept(interp_, rhs);
            for (std::uint32_t x = 0; x < interp_.size; ++x) {
                if (l[x] && !r[x]) require(x, rhs, changed);
            }
        }
        for (const auto& [role, pairs] : interp_.roles) {
            for (const auto& [x, y] : pairs) {
                if (inconsistent_[y] && !inconsistent_[x]) {
                    inconsistent_[x] = true;
                    changed = true;
                }
            }
        }
    } while (changed);
}

void CanonicalModel::require(std::uint32_t x, const Concept& c, bool& changed) {
    switch (c.kind()) {
        case ConceptKind::Top: return;
        case ConceptKind::Bottom:
            if (!inconsistent_[x]) {
                inconsistent_[x] = true;
                changed = true;
            }
            return;
        case ConceptKind::Name: {
            Extension& ext = interp_.concepts[c.symbol()];
            ext.resize(interp_.size, false);
            if (!ext[x]) {
                ext[x] = true;
                changed = true;
            }
            return;
        }
        case ConceptKind::Conj:
            for (const auto& op : c.operands()) require(x, op, changed);
            return;
        case ConceptKind::Exists: {
            std::uint32_t y = index_.at(c.filler());
            if (interp_.roles[c.symbol()].insert({x, y}).second) changed = true;
            return;
        }
    }
}

std::optional<std::uint32_t> CanonicalModel::element_of(const Concept& c) const {
    auto it = index_.find(canonicalize(c));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool CanonicalModel::entails(const Concept& c, const Concept& e) const {
    auto x = element_of(c);
    if (!x) throw std::invalid_argument("concept is not an element of the canonical model");
    return inconsistent_[*x] || eval_concept(interp_, e)[*x];
}

bool CanonicalModel::self_consistent(const Ontology& o) const {
    for (const auto& [lhs, rhs] : directed(o)) {
        Extension l = eval_concept(interp_, lhs);
        Extension r = eval_concept(interp_, rhs);
        for (std::uint32_t x = 0; x < interp_.size; ++x) {
            if (!inconsistent_[x] && l[x] && !r[x]) return false;
        }
    }
    return true;
}

CanonicalModel canonical_model(const Ontology& o, const std::vector<Concept>& goals) { return CanonicalModel(o, goals); }

// ---------------------------------------------------------------------------

std::size_t enumeration_weight(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Conj: {
            std::size_t w = 0;
            for (const auto& op : c.operands()) w += enumeration_weight(op);
            return w;
        }
        case ConceptKind::Exists: return 1 + enumeration_weight(c.filler());
        default: return 1;
    }
}

namespace {

struct Weighted {
    Concept c;
    std::size_t weight;
};

class Enumerator {
public:
    Enumerator(const Signature& sigma, std::size_t max_size) : max_size_(max_size) {
        for (const auto& s : sigma) {
            (s.kind == SymbolKind::ConceptName ? names_ : roles_).push_back(s.name);
        }
    }

    const std::vector<Weighted>& upto(std::size_t depth) {
        while (levels_.size() <= depth) levels_.push_back(build(levels_.size()));
        return levels_[depth];
    }

private:
    std::vector<Weighted> build(std::size_t depth) {
        std::vector<Weighted> atoms;
        for (const auto& n : names_) atoms.push_back({Concept::name(n), 1});
        if (depth > 0) {
            for (const auto& f : upto(depth - 1)) {
                if (f.c.is_bottom() || f.weight + 1 > max_size_) continue;
                for (const auto& r : roles_) atoms.push_back({Concept::exists(r, f.c), f.weight + 1});
            }
        }
        std::stable_sort(atoms.begin(), atoms.end(), [](const Weighted& a, const Weighted& b) { return a.weight < b.weight; });

        std::vector<Weighted> out{{Concept::top(), 1}, {Concept::bottom(), 1}};
        out.insert(out.end(), atoms.begin(), atoms.end());
        std::vector<Concept> chosen;
        std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t weight) {
            if (chosen.size() >= 2) out.push_back({make_conj(chosen), weight});
            for (std::size_t k = from; k < atoms.size(); ++k) {
                if (weight + atoms[k].weight > max_size_) break;
                chosen.push_back(atoms[k].c);
                extend(k + 1, weight + atoms[k].weight);
                chosen.pop_back();
            }
        };
        extend(0, 0);
        out.erase(std::remove_if(out.begin(), out.end(), [&](const Weighted& w) { return w.weight > max_size_; }),
                  out.end());
        std::sort(out.begin(), out.end(), [](const Weighted& a, const Weighted& b) {
            if (a.weight != b.weight) return a.weight < b.weight;
            return a.c < b.c;
        });
        return out;
    }

    std::size_t max_size_;
    std::vector<std::string> names_;
    std::vector<std::string> roles_;
    std::vector<std::vector<Weighted>> levels_;
};

}  // namespace

std::vector<Concept> enumerate_sigma_concepts(const Signature& sigma, std::size_t max_depth, std::size_t max_size) {
    if (max_size == 0) return {};
    Enumerator e(sigma, max_size);
    std::vector<Concept> out;
    for (const auto& w : e.upto(max_depth)) out.push_back(w.c);
    return out;
}

std::set<Concept> brute_force_define(const Ontology& o, const Concept& c, const Signature& sigma,
                                     std::size_t max_depth, std::size_t max_size) {
    const Concept cc = canonicalize(c);
    const CanonicalModel m0(o, {cc});
    std::vector<Concept> above;
    for (const auto& d : enumerate_sigma_concepts(sigma, max_depth, max_size)) {
        if (m0.entails(cc, d)) above.push_back(d);
    }
    std::vector<Concept> goals{cc};
    goals.insert(goals.end(), above.begin(), above.end());
    const CanonicalModel m1(o, goals);
    std::set<Concept> out;
    for (const auto& d : above) {
        if (m1.entails(d, cc)) out.insert(d);
    }
    return out;
}

// ---------------------------------------------------------------------------

Interpretation random_interpretation(const Signature& sig, std::mt19937_64& rng, double density) {
    Interpretation i;
    i.size = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::bernoulli_distribution coin(density);
    for (const auto& s : sig) {
        if (s.kind == SymbolKind::ConceptName) {
            Extension ext(i.size);
            for (std::size_t x = 0; x < i.size; ++x) ext[x] = coin(rng);
            i.concepts[s.name] = std::move(ext);
        } else {
            auto& pairs = i.roles[s.name];
            for (std::uint32_t x = 0; x < i.size; ++x) {
                for (std::uint32_t y = 0; y < i.size; ++y) {
                    if (coin(rng)) pairs.insert({x, y});
                }
            }
        }
    }
    return i;
}

namespace {

bool repair(Interpretation& i, std::uint32_t x, const Concept& c, std::mt19937_64& rng) {
    switch (c.kind()) {
        case ConceptKind::Top: return true;
        case ConceptKind::Bottom: return false;
        case ConceptKind::Name: {
            Extension& ext = i.concepts[c.symbol()];
            ext.resize(i.size, false);
            ext[x] = true;
            return true;
        }
        case ConceptKind::Conj:
            for (const auto& op : c.operands()) {
                if (!repair(i, x, op, rng)) return false;
            }
            return true;
        case ConceptKind::Exists: {
            if (eval_concept(i, c)[x]) return true;
            auto y = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(i.size - 1))(rng);
            i.roles[c.symbol()].insert({x, y});
            return repair(i, y, c.filler(), rng);
        }
    }
    return false;
}

bool chase(Interpretation& i, const std::vector<std::pair<Concept, Concept>>& axioms, std::mt19937_64& rng) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lhs, rhs] : axioms) {
            for (std::uint32_t x = 0; x < i.size; ++x) {
                if (!eval_concept(i, lhs)[x] || eval_concept(i, rhs)[x]) continue;
                if (!repair(i, x, rhs, rng)) return false;
                changed = true;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Interpretation> sample_model(const Ontology& o, const Signature& extra, std::mt19937_64& rng,
                                           std::size_t attempts) {
    Signature sig = signature_of(o);
    sig.insert(extra);
    const auto axioms = directed(o);
    for (std::size_t k = 0; k < attempts; ++k) {
        // Later attempts fill more sparsely, the last one starts empty.
        double density = k < attempts / 2 ? 0.5 : 0.5 * static_cast<double>(attempts - 1 - k) / static_cast<double>(attempts);
        Interpretation i = random_interpretation(sig, rng, density);
        if (chase(i, axioms, rng)) return i;
    }
    return std::nullopt;
}

}  // namespace eldef::oracle
