#include "generators.hpp"

namespace eldef::testing {

std::vector<Concept> micro_pool() {
    const Concept a = Concept::name("A");
    const Concept b = Concept::name("B");
    return {a,
            b,
            make_conj(a, b),
            Concept::exists("r", a),
            Concept::exists("r", b),
            Concept::exists("r", Concept::exists("r", a)),
            Concept::exists("r", Concept::exists("r", b))};
}

std::vector<Axiom> micro_axioms() {
    const auto pool = micro_pool();
    std::vector<Axiom> out;
    for (const auto& l : pool) {
        for (const auto& r : pool) {
            if (l != r) out.push_back(Axiom::sub(l, r));
        }
        out.push_back(Axiom::sub(l, Concept::bottom()));
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) out.push_back(Axiom::equiv(pool[i], pool[j]));
    }
    return out;
}

std::size_t for_each_micro_ontology(std::size_t max_axioms, const std::function<void(const Ontology&)>& f) {
    const auto axioms = micro_axioms();
    std::size_t count = 0;
    std::vector<Axiom> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        f(Ontology(chosen));
        ++count;
        if (chosen.size() == max_axioms) return;
        for (std::size_t k = from; k < axioms.size(); ++k) {
            chosen.push_back(axioms[k]);
            rec(k + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return count;
}

std::vector<Signature> subsets(const Signature& s) {
    std::vector<Symbol> syms(s.begin(), s.end());
    std::vector<Signature> out;
    for (std::size_t k = 0; k <= syms.size(); ++k) {
        // All masks with k bits, in increasing order.
        for (std::uint32_t m = 0; m < (1u << syms.size()); ++m) {
            if (static_cast<std::size_t>(__builtin_popcount(m)) != k) continue;
            Signature sub;
            for (std::size_t b = 0; b < syms.size(); ++b) {
                if (m >> b & 1u) sub.insert(syms[b]);
            }
            out.push_back(std::move(sub));
        }
    }
    return out;
}

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

Concept random_concept(std::mt19937_64& rng, const RandomShape& shape, std::size_t depth) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, shape.max_conjuncts)(rng);
    std::vector<Concept> parts;
    for (std::size_t i = 0; i < n; ++i) {
        std::bernoulli_distribution nest(depth > 0 ? 0.4 : 0.0);
        if (nest(rng)) {
            RandomShape inner = shape;
            inner.max_conjuncts = std::max<std::size_t>(1, shape.max_conjuncts - 1);
            parts.push_back(Concept::exists(pick(rng, shape.roles), random_concept(rng, inner, depth - 1)));
        } else {
            parts.push_back(Concept::name(pick(rng, shape.names)));
        }
    }
    if (std::bernoulli_distribution(0.05)(rng)) parts.push_back(Concept::top());
    return parts.size() == 1 ? parts[0] : Concept::conj(parts);
}

Axiom random_axiom(std::mt19937_64& rng, const RandomShape& shape) {
    Concept l = random_concept(rng, shape, shape.max_depth);
    if (std::bernoulli_distribution(shape.bottom_rate)(rng)) return Axiom::sub(l, Concept::bottom());
    Concept r = random_concept(rng, shape, shape.max_depth);
    if (std::bernoulli_distribution(shape.equiv_rate)(rng)) return Axiom::equiv(l, r);
    return Axiom::sub(l, r);
}

Ontology random_ontology(std::mt19937_64& rng, const RandomShape& shape) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(shape.min_axioms, shape.max_axioms)(rng);
    std::vector<Axiom> axioms;
    for (std::size_t i = 0; i < n; ++i) axioms.push_back(random_axiom(rng, shape));
    return Ontology(axioms);
}

Signature random_subset(std::mt19937_64& rng, const Signature& s) {
    Signature out;
    std::bernoulli_distribution coin(0.5);
    for (const auto& sym : s) {
        if (coin(rng)) out.insert(sym);
    }
    return out;
}

}  // namespace eldef::testing
