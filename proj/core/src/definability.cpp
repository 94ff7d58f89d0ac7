#include "eldef/definability.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

#include "eldef/syntax.hpp"

namespace eldef {

RenameMap::RenameMap(const Signature& symbols, const Signature& sigma) : sigma_(sigma) {
    for (const auto& s : symbols) {
        if (sigma.contains(s)) continue;
        Symbol copy{s.kind, fresh_name(s.name)};
        forward_.emplace(s, copy);
        inverse_.emplace(copy, s);
    }
}

Symbol RenameMap::apply(const Symbol& s) const {
    auto it = forward_.find(s);
    return it == forward_.end() ? s : it->second;
}

namespace {

Concept rename(const Concept& c, const std::map<Symbol, Symbol>& m) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Bottom: return c;
        case ConceptKind::Name: {
            auto it = m.find(Symbol::concept_name(c.symbol()));
            return it == m.end() ? c : Concept::name(it->second.name);
        }
        case ConceptKind::Exists: {
            auto it = m.find(Symbol::role(c.symbol()));
            const std::string& role = it == m.end() ? c.symbol() : it->second.name;
            return Concept::exists(role, rename(c.filler(), m));
        }
        case ConceptKind::Conj: {
            std::vector<Concept> ops;
            for (const auto& op : c.operands()) ops.push_back(rename(op, m));
            return Concept::conj(std::move(ops));
        }
    }
    return c;
}

}  // namespace

Concept RenameMap::apply(const Concept& c) const { return canonicalize(rename(c, forward_)); }
Concept RenameMap::restore(const Concept& c) const { return canonicalize(rename(c, inverse_)); }

Axiom RenameMap::apply(const Axiom& a) const { return {a.kind, apply(a.lhs), apply(a.rhs)}; }

Ontology RenameMap::apply(const Ontology& o) const {
    Ontology out;
    for (const auto& a : o.axioms()) out.add(apply(a));
    return out;
}

SignatureCopy rename_copy(const Ontology& o, const Concept& c, const Signature& sigma) {
    Signature symbols = signature_of(o);
    symbols.insert(signature_of(c));
    RenameMap map(symbols, sigma);
    return {map.apply(o), map.apply(c), std::move(map)};
}

bool is_definable(const Ontology& o, const Concept& c, const Signature& sigma, RuleSystem system,
                  const ReasonerLimits& limits) {
    SignatureCopy copy = rename_copy(o, c, sigma);
    Ontology joint = o;
    joint.add_all(copy.ontology);
    Concept cc = canonicalize(c);
    InferenceLog log = saturate(joint, {cc, copy.concept_copy}, system, limits);
    return log.entails(cc, copy.concept_copy);
}

// ---------------------------------------------------------------------------
// Labels

namespace {

constexpr std::uint32_t kNoComponent = static_cast<std::uint32_t>(-1);

// Strongly connected components of the conclusion graph (conclusion ->
// premises of each of its producers), iterative Tarjan.
std::vector<std::uint32_t> components(const std::vector<std::vector<std::vector<std::uint32_t>>>& premises) {
    const std::size_t n = premises.size();
    std::vector<std::uint32_t> comp(n, kNoComponent), index(n, kNoComponent), low(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(n, false);
    std::uint32_t counter = 0, next_comp = 0;
    struct Frame {
        std::uint32_t v;
        std::size_t producer = 0;
        std::size_t premise = 0;
    };
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kNoComponent) continue;
        std::vector<Frame> frames{{root}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& prods = premises[f.v];
            if (f.producer < prods.size()) {
                if (f.premise >= prods[f.producer].size()) {
                    ++f.producer;
                    f.premise = 0;
                    continue;
                }
                const std::uint32_t w = prods[f.producer][f.premise++];
                if (index[w] == kNoComponent) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::uint32_t v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
        }
    }
    return comp;
}

// One L-rule: the label of an inference's conclusion from its premises'.
DisjConcept label_step(const InferenceLog& log, const Signature& sigma, LabelAlgebra& algebra, const Inference& inf,
                       const std::vector<DisjConcept>& labels) {
    const Concept& rhs = log.universe().at(inf.conclusion.rhs);
    switch (inf.rule) {
        case Rule::SBot:
            return algebra.leaf(Concept::bottom());
        case Rule::S0:
        case Rule::STop:
        case Rule::SAx:
        case Rule::SEquiv:
        case Rule::SAndMinus:
        case Rule::SExistsBot:
            if (sigma.includes(signature_of(rhs))) return algebra.leaf(rhs);
            return {};
        case Rule::SChain: {
            DisjConcept acc;
            for (const auto& l : labels) algebra.unite_into(acc, l);
            return acc;
        }
        case Rule::SAndPlus: {
            DisjConcept acc = labels.front();
            for (std::size_t i = 1; i < labels.size() && !acc.is_epsilon(); ++i) acc = algebra.product(acc, labels[i]);
            return acc;
        }
        case Rule::SExists:
            if (sigma.contains_role(inf.side.role)) return algebra.wrap(inf.side.role, labels.front());
            return {};
        default:
            return {};
    }
}

// One disjunct of the label some derivation tree of least height gives
// `goal`. Used when the exact traversal runs out of budget.
DisjConcept shallow_label(const InferenceLog& log, std::size_t goal, const Signature& sigma, const LabelLimits& limits) {
    LabelLimits single = limits;
    single.max_conjuncts = 1;
    single.max_label_work = static_cast<std::size_t>(-1);
    LabelAlgebra algebra(single);
    const std::size_t n = log.conclusions().size();
    std::vector<std::optional<DisjConcept>> current(n);
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<std::optional<DisjConcept>> next(n);
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            for (InferenceId id : log.producers(i)) {
                const Inference& inf = log.inference(id);
                std::vector<DisjConcept> labels;
                bool ready = true;
                for (const auto& p : inf.premises) {
                    const auto& l = current[*log.index_of(p)];
                    if (!l) {
                        ready = false;
                        break;
                    }
                    labels.push_back(*l);
                }
                if (!ready) continue;
                if (!next[i]) next[i].emplace();
                algebra.unite_into(*next[i], label_step(log, sigma, algebra, inf, labels));
            }
            if (next[i] != current[i]) changed = true;
        }
        current = std::move(next);
        if (current[goal] && !current[goal]->is_epsilon()) break;
        if (!changed) break;
    }
    return current[goal].value_or(DisjConcept{});
}

struct ContextHash {
    std::size_t operator()(const std::pair<std::uint32_t, std::vector<std::uint32_t>>& k) const noexcept {
        std::size_t h = k.first;
        for (auto v : k.second) h = h * 1000003u ^ v;
        return h;
    }
};

// Labels by unfolding the inference graph into derivation trees. A
// conclusion is never used below itself, and an inference contributes only
// if all of its premises are derivable in the current context. Results are
// memoized per conclusion and the set of its ancestors lying in its own
// strongly connected component, the only ancestors it can reach.
class LabelTraversal {
public:
    LabelTraversal(const InferenceLog& log, const Signature& sigma, const LabelLimits& limits)
        : log_(log), sigma_(sigma), algebra_(limits), limits_(limits) {
        const std::size_t n = log.conclusions().size();
        premises_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (InferenceId id : log.producers(i)) {
                std::vector<std::uint32_t> ps;
                for (const auto& p : log.inference(id).premises) ps.push_back(static_cast<std::uint32_t>(*log.index_of(p)));
                premises_[i].push_back(std::move(ps));
            }
        }
        component_ = components(premises_);
        on_path_.assign(n, false);
        const ConceptId bot = log.universe().bottom();
        unsatisfiable_.assign(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const Inclusion c = log.conclusions()[i];
            unsatisfiable_[i] = c.lhs == bot || log.derived(Inclusion{c.lhs, bot});
        }
    }

    std::optional<DisjConcept> label(std::uint32_t node) {
        std::vector<std::uint32_t> context;
        if (auto it = path_by_component_.find(component_[node]); it != path_by_component_.end()) {
            context = it->second;
            std::sort(context.begin(), context.end());
        }
        auto key = std::make_pair(node, std::move(context));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (++stats_.nodes > limits_.max_traversal_steps) {
            algebra_.mark_truncated();
            return std::nullopt;
        }

        on_path_[node] = true;
        path_by_component_[component_[node]].push_back(node);
        std::optional<DisjConcept> acc = unsatisfiable_[node] ? first_derivation(node) : all_derivations(node);
        path_by_component_[component_[node]].pop_back();
        on_path_[node] = false;

        if (acc) stats_.max_label_size = std::max(stats_.max_label_size, acc->size());
        memo_.emplace(std::move(key), acc);
        return acc;
    }

    LabelAlgebra& algebra() { return algebra_; }
    const LabelStats& stats() const { return stats_; }

private:
    std::optional<DisjConcept> all_derivations(std::uint32_t node) {
        std::optional<DisjConcept> acc;
        const auto producers = log_.producers(node);
        for (std::size_t k = 0; k < producers.size(); ++k) {
            if (auto d = apply(producers[k], premises_[node][k])) {
                if (!acc) acc.emplace();
                algebra_.unite_into(*acc, *d);
            }
        }
        return acc;
    }

    // Below an unsatisfiable lhs one derivation with a nonempty label
    // suffices: ⊥ is a definition of everything there. X ⊑ ⊥, ⊥ ⊑ Y chains
    // are tried first, then zero-premise producers, then the rest.
    // Premise-free derivations are leaves and always kept; of the others
    // only the first with a non-ε label is followed.
    std::optional<DisjConcept> first_derivation(std::uint32_t node) {
        const auto producers = log_.producers(node);
        std::optional<DisjConcept> out;
        for (std::size_t k = 0; k < producers.size(); ++k) {
            if (!log_.inference(producers[k]).premises.empty()) continue;
            auto d = apply(producers[k], premises_[node][k]);
            if (!out) out = DisjConcept::epsilon();
            algebra_.unite_into(*out, *d);
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < producers.size(); ++k) {
                const Inference& inf = log_.inference(producers[k]);
                if (inf.premises.empty() || priority(inf) != pass) continue;
                auto d = apply(producers[k], premises_[node][k]);
                if (!d) continue;
                if (!out) out = DisjConcept::epsilon();
                if (d->is_epsilon()) continue;
                algebra_.unite_into(*out, *d);
                return out;
            }
        }
        return out;
    }

    int priority(const Inference& inf) const {
        const ConceptId bot = log_.universe().bottom();
        return inf.rule == Rule::SChain && inf.premises.front() == Inclusion{inf.conclusion.lhs, bot} ? 0 : 1;
    }

    std::optional<DisjConcept> apply(InferenceId id, const std::vector<std::uint32_t>& premises) {
        for (auto p : premises) {
            if (on_path_[p]) return std::nullopt;
        }
        std::vector<DisjConcept> labels;
        for (auto p : premises) {
            auto l = label(p);
            if (!l) return std::nullopt;
            labels.push_back(std::move(*l));
        }
        ++stats_.inferences;
        return label_step(log_, sigma_, algebra_, log_.inference(id), labels);
    }

    const InferenceLog& log_;
    const Signature& sigma_;
    LabelAlgebra algebra_;
    LabelLimits limits_;
    std::vector<std::vector<std::vector<std::uint32_t>>> premises_;
    std::vector<std::uint32_t> component_;
    std::vector<bool> on_path_;
    std::vector<bool> unsatisfiable_;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> path_by_component_;
    std::unordered_map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::optional<DisjConcept>, ContextHash>
        memo_;
    LabelStats stats_;
};

}  // namespace

LabelResult compute_labels(const InferenceLog& log, Inclusion goal, const Signature& sigma, const LabelLimits& limits) {
    if (log.system() != RuleSystem::B) throw std::invalid_argument("labels are defined on system B logs");
    LabelResult out;
    auto index = log.index_of(goal);
    if (!index) return out;

    LabelTraversal traversal(log, sigma, limits);
    auto l = traversal.label(static_cast<std::uint32_t>(*index));
    out.stats = traversal.stats();
    out.truncated = traversal.algebra().truncated();
    if (l) out.label = std::move(*l);
    if (out.truncated && out.label.is_epsilon()) out.label = shallow_label(log, *index, sigma, limits);
    return out;
}

// ---------------------------------------------------------------------------
// Interpolants from system A proofs

namespace {

class Extractor {
public:
    Extractor(const Proof& proof, const Signature& sigma, const Signature& sig1, const Signature& sig2)
        : proof_(proof), sigma_(sigma), sig1_(sig1), sig2_(sig2) {}

    Concept at(std::size_t i) {
        const ProofStep& s = proof_.steps.at(i);
        switch (s.rule) {
            case Rule::R0:
            case Rule::RTop:
                if (in(sigma_, s.rhs)) return s.rhs;
                fail(s, "conclusion leaves the signature");
            case Rule::RBot:
            case Rule::RExistsBot:
                return Concept::bottom();
            case Rule::RAndPlus: {
                std::vector<Concept> parts;
                for (auto p : s.premises) parts.push_back(at(p));
                return make_conj(parts);
            }
            case Rule::RSub: {
                const Signature ax = signature_of(*s.axiom);
                if (sig1_.includes(ax) && in(sigma_, s.rhs)) return s.rhs;
                if (sig2_.includes(ax)) return at(s.premises.front());
                fail(s, "axiom belongs to neither side usably");
            }
            case Rule::RAndMinus: {
                const ProofStep& prem = proof_.steps.at(s.premises.front());
                if (in(sig2_, prem.rhs)) return at(s.premises.front());
                if (in(sigma_, s.rhs)) return s.rhs;
                fail(s, "conjunct leaves the signature");
            }
            case Rule::RExists: {
                const ProofStep& prem = proof_.steps.at(s.premises.front());
                if (in(sig2_, prem.rhs)) return at(s.premises.front());
                if (sigma_.contains_role(s.role)) return Concept::exists(s.role, at(s.premises.at(1)));
                fail(s, "role leaves the signature");
            }
            default:
                fail(s, "not a system A inference");
        }
    }

private:
    static bool in(const Signature& sig, const Concept& c) { return sig.includes(signature_of(c)); }

    [[noreturn]] static void fail(const ProofStep& s, const std::string& why) {
        throw NotExtractableError(std::string(rule_name(s.rule)) + " " + serialize(Axiom::sub(s.lhs, s.rhs)) + ": " +
                                  why);
    }

    const Proof& proof_;
    const Signature& sigma_;
    const Signature& sig1_;
    const Signature& sig2_;
};

}  // namespace

Concept interpolant_from_proof(const Proof& proof, const Signature& sigma, const Signature& sig1,
                               const Signature& sig2) {
    if (proof.steps.empty()) throw NotExtractableError("empty proof");
    return canonicalize(Extractor(proof, sigma, sig1, sig2).at(proof.steps.size() - 1));
}

// ---------------------------------------------------------------------------

DefinitionResult define(const Ontology& o, const Concept& c, const Signature& sigma, const DefineOptions& options) {
    DefinitionResult result;
    SignatureCopy copy = rename_copy(o, c, sigma);
    Ontology joint = o;
    joint.add_all(copy.ontology);
    const Concept cc = canonicalize(c);

    InferenceLog log = saturate(joint, {cc, copy.concept_copy}, RuleSystem::B, options.reasoner);
    result.stats.conclusions = log.conclusions().size();
    result.stats.inferences = log.inferences().size();
    auto goal = log.inclusion(cc, copy.concept_copy);
    if (!goal || !log.derived(*goal)) return result;

    LabelResult labels = compute_labels(log, *goal, sigma, options.labels);
    result.stats.labels = labels.stats;
    result.truncated = labels.truncated;
    std::vector<Concept> candidates(labels.label.disjuncts().begin(), labels.label.disjuncts().end());
    result.stats.candidates = candidates.size();

    for (const auto& d : candidates) {
        if (!sigma.includes(signature_of(d))) {
            throw SoundnessError("candidate " + serialize(d) + " leaves the target signature");
        }
    }
    std::vector<Concept> goals{cc};
    goals.insert(goals.end(), candidates.begin(), candidates.end());
    InferenceLog check = saturate(o, goals, RuleSystem::A, options.reasoner);
    for (const auto& d : candidates) {
        if (!check.entails(cc, d) || !check.entails(d, cc)) {
            throw SoundnessError("candidate " + serialize(d) + " is not equivalent to " + serialize(cc));
        }
    }

    std::vector<std::pair<std::size_t, std::string>> keys;
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        keys.emplace_back(candidates[i].size(), serialize(candidates[i]));
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (auto i : order) {
        const Concept& d = candidates[i];
        if (options.semantic_dedup) {
            bool merged = std::any_of(result.definitions.begin(), result.definitions.end(), [&](const Concept& kept) {
                return check.entails(kept, d) && check.entails(d, kept);
            });
            if (merged) continue;
        }
        result.definitions.push_back(d);
    }
    if (result.definitions.size() > options.max_definitions) {
        result.definitions.resize(options.max_definitions);
        result.truncated = true;
    }
    if (result.truncated && result.definitions.empty()) {
        throw ResourceLimitError("label caps exhausted before any definition was found");
    }
    result.definable = !result.definitions.empty();
    return result;
}

FamilyInstance generate_family(std::size_t n) {
    if (n == 0) throw std::invalid_argument("family size must be positive");
    auto a = [](std::size_t i) { return Concept::name("A_" + std::to_string(i)); };
    FamilyInstance out;
    for (std::size_t i = 0; i < n; ++i) {
        out.ontology.add(Axiom::equiv(a(i), Concept::conj({Concept::exists("r", a(i + 1)), Concept::exists("s", a(i + 1))})));
    }
    out.ontology.add(Axiom::equiv(a(n), Concept::name("D_1")));
    out.ontology.add(Axiom::equiv(a(n), Concept::name("D_2")));
    out.target = a(0);
    out.sigma = {Symbol::role("r"), Symbol::role("s"), Symbol::concept_name("D_1"), Symbol::concept_name("D_2")};
    return out;
}

}  // namespace eldef
