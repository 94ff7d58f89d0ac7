#include "eldef/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_set>

#include "eldef/syntax.hpp"

namespace eldef {

std::string_view rule_name(Rule r) noexcept {
    switch (r) {
        case Rule::R0: return "R_0";
        case Rule::RTop: return "R_top";
        case Rule::RBot: return "R_bot";
        case Rule::RSub: return "R_sub";
        case Rule::RAndMinus: return "R_and-";
        case Rule::RAndPlus: return "R_and+";
        case Rule::RExistsBot: return "R_ex_bot";
        case Rule::RExists: return "R_ex";
        case Rule::S0: return "S_0";
        case Rule::STop: return "S_top";
        case Rule::SBot: return "S_bot";
        case Rule::SAx: return "S_ax";
        case Rule::SChain: return "S_chain";
        case Rule::SEquiv: return "S_equiv";
        case Rule::SAndMinus: return "S_and-";
        case Rule::SAndPlus: return "S_and+";
        case Rule::SExistsBot: return "S_ex_bot";
        case Rule::SExists: return "S_ex";
    }
    return "?";
}

RuleSystem rule_system(Rule r) noexcept {
    return static_cast<int>(r) <= static_cast<int>(Rule::RExists) ? RuleSystem::A : RuleSystem::B;
}

Universe::Universe(const std::vector<Concept>& sorted_concepts) : concepts_(sorted_concepts) {
    for (ConceptId i = 0; i < concepts_.size(); ++i) {
        index_.emplace(concepts_[i], i);
        if (concepts_[i].is_top()) top_ = i;
        if (concepts_[i].is_bottom()) bottom_ = i;
    }
}

std::optional<ConceptId> Universe::find(const Concept& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::uint64_t pack(Inclusion i) { return (static_cast<std::uint64_t>(i.lhs) << 32) | i.rhs; }
std::uint64_t pack(ConceptId a, ConceptId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

}  // namespace

std::optional<Inclusion> InferenceLog::inclusion(const Concept& lhs, const Concept& rhs) const {
    auto l = universe_.find(canonicalize(lhs));
    auto r = universe_.find(canonicalize(rhs));
    if (!l || !r) return std::nullopt;
    return Inclusion{*l, *r};
}

bool InferenceLog::derived(const Concept& lhs, const Concept& rhs) const {
    auto i = inclusion(lhs, rhs);
    return i && derived(*i);
}

bool InferenceLog::entails(Inclusion i) const {
    return derived(i) || derived(Inclusion{i.lhs, universe_.bottom()});
}

bool InferenceLog::entails(const Concept& lhs, const Concept& rhs) const {
    auto i = inclusion(lhs, rhs);
    return i && entails(*i);
}

std::optional<std::size_t> InferenceLog::index_of(Inclusion i) const {
    auto it = conclusion_index_.find(pack(i));
    if (it == conclusion_index_.end()) return std::nullopt;
    return it->second;
}

std::span<const InferenceId> InferenceLog::producers(std::size_t conclusion_index) const {
    return producers_.at(conclusion_index);
}

std::span<const InferenceId> InferenceLog::producers(Inclusion i) const {
    auto idx = index_of(i);
    if (!idx) return {};
    return producers_[*idx];
}

std::string InferenceLog::to_string(Inclusion i) const {
    return serialize(Axiom::sub(universe_.at(i.lhs), universe_.at(i.rhs)));
}

namespace detail {

class Saturator {
public:
    Saturator(InferenceLog& log, const ReasonerLimits& limits) : log_(log), limits_(limits) { build_indices(); }

    static InferenceLog saturate(const Ontology& o, const std::vector<Concept>& goals, RuleSystem system,
                                 const ReasonerLimits& limits) {
        InferenceLog log;
        log.system_ = system;
        log.ontology_ = o;
        for (const auto& g : goals) log.goals_.push_back(canonicalize(g));

        std::set<Concept> closure = subconcept_closure(o, log.goals_);
        if (system == RuleSystem::B) {
            std::vector<Concept> extra;
            for (const auto& c : closure) {
                if (c.kind() == ConceptKind::Exists) extra.push_back(Concept::exists(c.symbol(), Concept::bottom()));
            }
            closure.insert(extra.begin(), extra.end());
        }
        log.universe_ = Universe(std::vector<Concept>(closure.begin(), closure.end()));

        Saturator(log, limits).run();
        return log;
    }

    void run() {
        if (log_.system_ == RuleSystem::A) {
            init_a();
        } else {
            init_b();
        }
        while (!queue_.empty()) {
            Event e = queue_.front();
            queue_.pop_front();
            if (e.step) {
                process_step(e.incl);
            } else if (log_.system_ == RuleSystem::A) {
                process_a(e.incl);
            } else {
                process_b(e.incl);
            }
        }
    }

private:
    struct Event {
        Inclusion incl;
        bool step;
    };

    static constexpr ConceptId kNone = static_cast<ConceptId>(-1);

    void build_indices() {
        const auto& u = log_.universe_;
        const std::size_t n = u.size();
        told_by_lhs_.resize(n);
        conj_parts_.resize(n);
        conj_containing_.resize(n);
        exists_by_filler_.resize(n);
        exists_role_.assign(n, kNone);
        exists_filler_.assign(n, kNone);
        processed_by_rhs_.resize(n);
        processed_by_lhs_.resize(n);
        steps_from_.resize(n);

        for (ConceptId id = 0; id < n; ++id) {
            const Concept& c = u.at(id);
            if (c.kind() == ConceptKind::Conj) {
                for (const auto& op : c.operands()) {
                    ConceptId p = *u.find(op);
                    conj_parts_[id].push_back(p);
                    conj_containing_[p].push_back(id);
                }
            } else if (c.kind() == ConceptKind::Exists) {
                std::uint32_t role = intern_role(c.symbol());
                ConceptId f = *u.find(c.filler());
                exists_role_[id] = role;
                exists_filler_[id] = f;
                exists_by_filler_[f].push_back({role, id});
                exists_index_.emplace(pack(role, f), id);
            }
        }
        const auto& axioms = log_.ontology_.axioms();
        for (std::size_t i = 0; i < axioms.size(); ++i) {
            ConceptId l = *u.find(axioms[i].lhs);
            ConceptId r = *u.find(axioms[i].rhs);
            told_by_lhs_[l].push_back({r, i});
            if (axioms[i].kind == AxiomKind::EquivalentClasses) told_by_lhs_[r].push_back({l, i});
        }
    }

    std::uint32_t intern_role(const std::string& r) {
        auto [it, inserted] = role_ids_.emplace(r, static_cast<std::uint32_t>(roles_.size()));
        if (inserted) roles_.push_back(r);
        return it->second;
    }

    ConceptId exists_of(std::uint32_t role, ConceptId filler) const {
        auto it = exists_index_.find(pack(role, filler));
        return it == exists_index_.end() ? kNone : it->second;
    }

    bool processed(ConceptId l, ConceptId r) const { return processed_.count(pack(l, r)) != 0; }

    static bool is_step_rule(Rule r) {
        switch (r) {
            case Rule::SAx:
            case Rule::SEquiv:
            case Rule::SAndMinus:
            case Rule::SExistsBot:
            case Rule::SBot:
            case Rule::SExists:
                return true;
            default:
                return false;
        }
    }

    void derive(Rule rule, std::vector<Inclusion> premises, Inclusion concl, SideData side = {}) {
        std::string key;
        key.reserve(16 + 8 * premises.size());
        auto put = [&key](std::uint64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
        put(static_cast<std::uint64_t>(rule));
        put(pack(concl));
        for (const auto& p : premises) put(pack(p));
        if (side.axiom) put(*side.axiom);
        for (auto c : side.chain) put(c);
        key += side.role;
        if (!seen_inferences_.insert(std::move(key)).second) return;

        if (log_.inferences_.size() >= limits_.max_inferences) {
            throw ResourceLimitError("saturation exceeded the inference cap (" +
                                     std::to_string(limits_.max_inferences) + ")");
        }
        auto id = static_cast<InferenceId>(log_.inferences_.size());
        log_.inferences_.push_back(Inference{rule, std::move(premises), concl, std::move(side)});

        auto [it, fresh] = log_.conclusion_index_.emplace(pack(concl), static_cast<std::uint32_t>(log_.conclusions_.size()));
        if (fresh) {
            if (log_.conclusions_.size() >= limits_.max_inclusions) {
                throw ResourceLimitError("saturation exceeded the derived-inclusion cap (" +
                                         std::to_string(limits_.max_inclusions) + ")");
            }
            log_.conclusions_.push_back(concl);
            log_.producers_.emplace_back();
            queue_.push_back({concl, false});
        }
        log_.producers_[it->second].push_back(id);

        if (log_.system_ == RuleSystem::B && is_step_rule(rule) && steps_.insert(pack(concl)).second) {
            queue_.push_back({concl, true});
        }
    }

    void mark_processed(Inclusion i) {
        processed_.insert(pack(i));
        processed_by_rhs_[i.rhs].push_back(i.lhs);
        processed_by_lhs_[i.lhs].push_back(i.rhs);
    }

    void try_conj_intro(Rule rule, ConceptId lhs, ConceptId part) {
        for (ConceptId conj : conj_containing_[part]) {
            const auto& parts = conj_parts_[conj];
            bool ready = std::all_of(parts.begin(), parts.end(), [&](ConceptId p) { return processed(lhs, p); });
            if (!ready) continue;
            std::vector<Inclusion> premises;
            premises.reserve(parts.size());
            for (ConceptId p : parts) premises.push_back({lhs, p});
            derive(rule, std::move(premises), {lhs, conj});
        }
    }

    // --- system A ---------------------------------------------------------

    void init_a() {
        const auto& u = log_.universe_;
        for (ConceptId c = 0; c < u.size(); ++c) {
            derive(Rule::R0, {}, {c, c});
            derive(Rule::RTop, {}, {c, u.top()});
            derive(Rule::RBot, {}, {u.bottom(), c});
        }
    }

    void process_a(Inclusion i) {
        mark_processed(i);
        const ConceptId x = i.lhs;
        const ConceptId y = i.rhs;
        const ConceptId bot = log_.universe_.bottom();

        for (const auto& [f, ax] : told_by_lhs_[y]) {
            SideData side;
            side.axiom = ax;
            derive(Rule::RSub, {i}, {x, f}, std::move(side));
        }
        for (ConceptId part : conj_parts_[y]) derive(Rule::RAndMinus, {i}, {x, part});
        try_conj_intro(Rule::RAndPlus, x, y);

        // i as the first premise C ⊑ ∃r.E
        if (exists_role_[y] != kNone) {
            const std::uint32_t role = exists_role_[y];
            const ConceptId e = exists_filler_[y];
            if (processed(e, bot)) {
                derive(Rule::RExistsBot, {i, {e, bot}}, {x, bot}, role_side(role));
            }
            for (ConceptId f : processed_by_lhs_[e]) {
                ConceptId target = exists_of(role, f);
                if (target != kNone) derive(Rule::RExists, {i, {e, f}}, {x, target}, role_side(role));
            }
        }
        // i as the second premise E ⊑ F
        for (const auto& [role, ex] : exists_by_filler_[x]) {
            const ConceptId target = y == bot ? bot : exists_of(role, y);
            if (target == kNone) continue;
            const Rule rule = y == bot ? Rule::RExistsBot : Rule::RExists;
            for (ConceptId c : processed_by_rhs_[ex]) {
                derive(rule, {{c, ex}, i}, {c, target}, role_side(role));
            }
            if (y == bot) {
                // R_ex_bot and R_ex both apply when ∃r.⊥ is in the universe.
                ConceptId ex_bot = exists_of(role, bot);
                if (ex_bot == kNone) continue;
                for (ConceptId c : processed_by_rhs_[ex]) {
                    derive(Rule::RExists, {{c, ex}, i}, {c, ex_bot}, role_side(role));
                }
            }
        }
    }

    SideData role_side(std::uint32_t role) const {
        SideData s;
        s.role = roles_[role];
        return s;
    }

    // --- system B ---------------------------------------------------------

    void init_b() {
        const auto& u = log_.universe_;
        for (ConceptId c = 0; c < u.size(); ++c) {
            derive(Rule::S0, {}, {c, c});
            derive(Rule::STop, {}, {c, u.top()});
            derive(Rule::SBot, {}, {u.bottom(), c});
        }
        const auto& axioms = log_.ontology_.axioms();
        for (std::size_t a = 0; a < axioms.size(); ++a) {
            if (axioms[a].kind != AxiomKind::SubClassOf) continue;
            SideData side;
            side.axiom = a;
            derive(Rule::SAx, {}, {*u.find(axioms[a].lhs), *u.find(axioms[a].rhs)}, std::move(side));
        }
        init_equivalence_chains();
        for (ConceptId c = 0; c < u.size(); ++c) {
            for (ConceptId part : conj_parts_[c]) derive(Rule::SAndMinus, {}, {c, part});
        }
        for (ConceptId c = 0; c < u.size(); ++c) {
            if (exists_role_[c] != kNone && exists_filler_[c] == u.bottom()) {
                derive(Rule::SExistsBot, {}, {c, u.bottom()}, role_side(exists_role_[c]));
            }
        }
    }

    // Emits Cj ⊑ Ck for every ordered pair in a connected component of the
    // graph of ≡ axioms, carrying a shortest connecting chain.
    void init_equivalence_chains() {
        const auto& u = log_.universe_;
        const auto& axioms = log_.ontology_.axioms();
        std::map<ConceptId, std::vector<std::pair<ConceptId, std::size_t>>> adj;
        for (std::size_t a = 0; a < axioms.size(); ++a) {
            if (axioms[a].kind != AxiomKind::EquivalentClasses) continue;
            ConceptId l = *u.find(axioms[a].lhs);
            ConceptId r = *u.find(axioms[a].rhs);
            if (l == r) continue;
            adj[l].push_back({r, a});
            adj[r].push_back({l, a});
        }
        for (auto& [node, edges] : adj) std::sort(edges.begin(), edges.end());

        for (const auto& [source, unused] : adj) {
            // BFS from source; predecessor links give the chain.
            std::map<ConceptId, std::pair<ConceptId, std::size_t>> pred;
            std::queue<ConceptId> q;
            q.push(source);
            pred[source] = {source, 0};
            std::vector<ConceptId> order;
            while (!q.empty()) {
                ConceptId v = q.front();
                q.pop();
                order.push_back(v);
                for (const auto& [w, a] : adj[v]) {
                    if (pred.count(w)) continue;
                    pred[w] = {v, a};
                    q.push(w);
                }
            }
            std::sort(order.begin(), order.end());
            for (ConceptId target : order) {
                if (target == source) continue;
                SideData side;
                for (ConceptId v = target; v != source; v = pred[v].first) {
                    side.chain.push_back(v);
                    side.chain_axioms.push_back(pred[v].second);
                }
                side.chain.push_back(source);
                std::reverse(side.chain.begin(), side.chain.end());
                std::reverse(side.chain_axioms.begin(), side.chain_axioms.end());
                derive(Rule::SEquiv, {}, {source, target}, std::move(side));
            }
        }
    }

    void process_b(Inclusion i) {
        mark_processed(i);
        const ConceptId x = i.lhs;
        const ConceptId y = i.rhs;
        for (const auto& [role, ex] : exists_by_filler_[x]) {
            ConceptId target = exists_of(role, y);
            if (target != kNone) derive(Rule::SExists, {i}, {ex, target}, role_side(role));
        }
        try_conj_intro(Rule::SAndPlus, x, y);
        for (ConceptId z : steps_from_[y]) derive(Rule::SChain, {i, {y, z}}, {x, z});
    }

    void process_step(Inclusion step) {
        steps_from_[step.lhs].push_back(step.rhs);
        for (ConceptId x : processed_by_rhs_[step.lhs]) {
            derive(Rule::SChain, {{x, step.lhs}, step}, {x, step.rhs});
        }
    }

    InferenceLog& log_;
    ReasonerLimits limits_;
    std::deque<Event> queue_;
    std::unordered_set<std::string> seen_inferences_;

    std::vector<std::vector<std::pair<ConceptId, std::size_t>>> told_by_lhs_;
    std::vector<std::vector<ConceptId>> conj_parts_;
    std::vector<std::vector<ConceptId>> conj_containing_;
    std::vector<std::vector<std::pair<std::uint32_t, ConceptId>>> exists_by_filler_;
    std::vector<std::uint32_t> exists_role_;
    std::vector<ConceptId> exists_filler_;
    std::unordered_map<std::uint64_t, ConceptId> exists_index_;
    std::vector<std::string> roles_;
    std::unordered_map<std::string, std::uint32_t> role_ids_;

    std::unordered_set<std::uint64_t> processed_;
    std::vector<std::vector<ConceptId>> processed_by_rhs_;
    std::vector<std::vector<ConceptId>> processed_by_lhs_;
    std::unordered_set<std::uint64_t> steps_;
    std::vector<std::vector<ConceptId>> steps_from_;
};

}  // namespace detail

InferenceLog saturate(const Ontology& o, const std::vector<Concept>& goals, RuleSystem system,
                      const ReasonerLimits& limits) {
    return detail::Saturator::saturate(o, goals, system, limits);
}

bool entails(const Ontology& o, const Axiom& query, RuleSystem system, const ReasonerLimits& limits) {
    Axiom q = canonicalize(query);
    InferenceLog log = saturate(o, {q.lhs, q.rhs}, system, limits);
    if (!log.entails(q.lhs, q.rhs)) return false;
    return q.kind == AxiomKind::SubClassOf || log.entails(q.rhs, q.lhs);
}

}  // namespace eldef
