#include <algorithm>
#include <set>
#include <span>
#include <unordered_map>

#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"

namespace eldef {

namespace {

constexpr std::uint32_t kUnchosen = static_cast<std::uint32_t>(-1);

class ProofSearch {
public:
    ProofSearch(const InferenceLog& log, const ProofLimits& limits, const std::function<bool(const Proof&)>& visit)
        : log_(log), limits_(limits), visit_(visit), chosen_(log.conclusions().size(), kUnchosen) {}

    ProofCount run(std::size_t goal) {
        root_ = goal;
        search({goal});
        return {emitted_, !capped_};
    }

private:
    // True while the search should continue.
    bool search(std::vector<std::size_t> open) {
        if (++steps_ > limits_.max_search_steps) {
            capped_ = true;
            return false;
        }
        while (!open.empty() && chosen_[open.back()] != kUnchosen) open.pop_back();
        if (open.empty()) return emit();

        const std::size_t node = open.back();
        open.pop_back();
        return try_producers(node, log_.producers(node), open);
    }

    bool try_producers(std::size_t node, std::span<const InferenceId> producers, const std::vector<std::size_t>& open) {
        for (InferenceId inf : producers) {
            const auto& premises = log_.inference(inf).premises;
            bool cyclic = false;
            for (const auto& p : premises) {
                if (reaches(*log_.index_of(p), node)) {
                    cyclic = true;
                    break;
                }
            }
            if (cyclic) continue;

            chosen_[node] = inf;
            std::vector<std::size_t> next = open;
            for (auto it = premises.rbegin(); it != premises.rend(); ++it) next.push_back(*log_.index_of(*it));
            bool go_on = search(std::move(next));
            chosen_[node] = kUnchosen;
            if (!go_on) return false;
        }
        return true;
    }

    // Whether `target` is reachable from `from` along chosen producers.
    bool reaches(std::size_t from, std::size_t target) const {
        std::vector<std::size_t> stack{from};
        std::set<std::size_t> seen;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            if (v == target) return true;
            if (!seen.insert(v).second || chosen_[v] == kUnchosen) continue;
            for (const auto& p : log_.inference(chosen_[v]).premises) stack.push_back(*log_.index_of(p));
        }
        return false;
    }

    bool emit() {
        Proof proof;
        std::unordered_map<std::size_t, std::size_t> position;
        build(root_, proof, position);
        ++emitted_;
        if (!visit_(proof)) return false;
        if (emitted_ >= limits_.max_proofs) {
            capped_ = true;
            return false;
        }
        return true;
    }

    std::size_t build(std::size_t node, Proof& proof, std::unordered_map<std::size_t, std::size_t>& position) {
        if (auto it = position.find(node); it != position.end()) return it->second;
        const Inference& inf = log_.inference(chosen_[node]);
        ProofStep step;
        for (const auto& p : inf.premises) step.premises.push_back(build(*log_.index_of(p), proof, position));
        const auto& u = log_.universe();
        step.rule = inf.rule;
        step.lhs = u.at(inf.conclusion.lhs);
        step.rhs = u.at(inf.conclusion.rhs);
        step.role = inf.side.role;
        const auto& axioms = log_.ontology().axioms();
        if (inf.side.axiom) step.axiom = axioms.at(*inf.side.axiom);
        for (auto a : inf.side.chain_axioms) step.chain_axioms.push_back(axioms.at(a));
        proof.steps.push_back(std::move(step));
        position[node] = proof.steps.size() - 1;
        return proof.steps.size() - 1;
    }

    const InferenceLog& log_;
    ProofLimits limits_;
    const std::function<bool(const Proof&)>& visit_;
    std::vector<std::uint32_t> chosen_;
    std::size_t root_ = 0;
    std::size_t emitted_ = 0;
    std::size_t steps_ = 0;
    bool capped_ = false;
};

void render_step(const Proof& proof, std::size_t index, std::size_t indent, std::string& out) {
    const ProofStep& s = proof.steps[index];
    out.append(indent * 2, ' ');
    out += rule_name(s.rule);
    out += ": ";
    out += serialize(Axiom::sub(s.lhs, s.rhs));
    if (s.axiom) {
        out += "  [" + serialize(*s.axiom) + "]";
    } else if (!s.chain_axioms.empty()) {
        out += "  [";
        for (std::size_t i = 0; i < s.chain_axioms.size(); ++i) {
            if (i) out += ", ";
            out += serialize(s.chain_axioms[i]);
        }
        out += "]";
    } else if (!s.role.empty()) {
        out += "  [role " + s.role + "]";
    }
    out += '\n';
    for (auto p : s.premises) render_step(proof, p, indent + 1, out);
}

}  // namespace

ProofCount for_each_proof(const InferenceLog& log, Inclusion goal, const ProofLimits& limits,
                          const std::function<bool(const Proof&)>& visit) {
    auto idx = log.index_of(goal);
    if (!idx) return {};
    if (limits.max_proofs == 0) return {0, false};
    return ProofSearch(log, limits, visit).run(*idx);
}

std::vector<Proof> proofs(const InferenceLog& log, Inclusion goal, const ProofLimits& limits) {
    std::vector<Proof> out;
    for_each_proof(log, goal, limits, [&out](const Proof& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::string render_proof(const Proof& proof) {
    std::string out;
    if (!proof.steps.empty()) render_step(proof, proof.steps.size() - 1, 0, out);
    return out;
}

std::vector<std::string> star_property_violations(const InferenceLog& log) {
    std::vector<std::string> out;
    if (log.system() != RuleSystem::A) return out;
    const std::set<Concept> occurring = subconcept_closure(log.ontology(), log.goals());
    const auto& u = log.universe();
    for (const auto& inf : log.inferences()) {
        if (inf.rule == Rule::RTop || inf.rule == Rule::RBot || inf.rule == Rule::RExistsBot) continue;
        const Concept& lhs = u.at(inf.conclusion.lhs);
        const Concept& rhs = u.at(inf.conclusion.rhs);
        if (occurring.count(rhs)) continue;
        std::vector<Concept> in_lhs;
        collect_subconcepts(lhs, in_lhs);
        if (std::find(in_lhs.begin(), in_lhs.end(), rhs) != in_lhs.end()) continue;
        out.push_back(std::string(rule_name(inf.rule)) + ": " + log.to_string(inf.conclusion));
    }
    return out;
}

}  // namespace eldef
