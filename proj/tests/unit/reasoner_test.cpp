#include <doctest.h>

#include <random>

#include "eldef/oracle.hpp"
#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"
#include "generators.hpp"

using namespace eldef;

namespace {

const char* kCuisine =
    "Ontology(SubClassOf(ObjectIntersectionOf(Dumplings Entree) Gnocci) SubClassOf(Gnocci Dumplings) "
    "SubClassOf(Dumplings Entree))";

Concept n(const char* s) { return Concept::name(s); }

std::set<std::pair<Concept, Concept>> conclusion_set(const InferenceLog& log) {
    std::set<std::pair<Concept, Concept>> out;
    for (auto i : log.conclusions()) out.emplace(log.universe().at(i.lhs), log.universe().at(i.rhs));
    return out;
}

}  // namespace

TEST_CASE("saturate on the cuisine ontology") {
    const Ontology o = parse_ontology(kCuisine);
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        const auto log = saturate(o, {make_conj(n("Dumplings"), n("Entree"))}, sys);
        CHECK(log.derived(n("Dumplings"), n("Gnocci")));
        CHECK(log.derived(n("Gnocci"), n("Dumplings")));
        CHECK(star_property_violations(log).empty());
    }
}

TEST_CASE("saturate the empty ontology") {
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        const auto log = saturate(Ontology(), {n("A")}, sys);
        const Concept a = n("A");
        const Concept top = Concept::top();
        const Concept bot = Concept::bottom();
        CHECK(log.derived(a, a));
        CHECK(log.derived(a, top));
        CHECK(log.derived(bot, a));
        for (const auto& [l, r] : conclusion_set(log)) {
            if (l != a && r != a) continue;
            const bool expected = (l == a && (r == a || r == top)) || (l == bot && r == a);
            CHECK_MESSAGE(expected, to_dl_string(l) << " ⊑ " << to_dl_string(r));
        }
    }
}

TEST_CASE("entails") {
    const Ontology o = parse_ontology(kCuisine);
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        CHECK(entails(o, Axiom::equiv(n("Dumplings"), n("Gnocci")), sys));
        CHECK(entails(o, Axiom::sub(n("Entree"), n("Entree")), sys));
        CHECK(entails(o, Axiom::sub(Concept::exists("r", n("Zed")), Concept::exists("r", n("Zed"))), sys));
        CHECK_FALSE(entails(o, Axiom::sub(n("Entree"), n("Dumplings")), sys));
    }
    const auto m = oracle::canonical_model(o, {n("Entree")});
    CHECK_FALSE(m.entails(n("Entree"), n("Dumplings")));
}

TEST_CASE("equivalences are used in both directions") {
    const Ontology o({Axiom::equiv(n("A"), n("B")), Axiom::sub(n("C"), n("B"))});
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        CHECK(entails(o, Axiom::sub(n("C"), n("A")), sys));
        CHECK_FALSE(entails(o, Axiom::sub(n("A"), n("C")), sys));
    }
}

TEST_CASE("unsatisfiable concepts entail everything") {
    const Ontology o({Axiom::sub(n("A"), Concept::exists("r", n("B"))), Axiom::sub(n("B"), Concept::bottom())});
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        CHECK(entails(o, Axiom::sub(n("A"), Concept::bottom()), sys));
        CHECK(entails(o, Axiom::sub(n("A"), n("Q")), sys));
        CHECK(entails(o, Axiom::sub(n("B"), Concept::exists("s", n("B"))), sys));
    }
}

TEST_CASE("resource limits are enforced") {
    ReasonerLimits tiny;
    tiny.max_inclusions = 3;
    CHECK_THROWS_AS(saturate(parse_ontology(kCuisine), {}, RuleSystem::A, tiny), ResourceLimitError);
}

TEST_CASE("systems agree, conclusions are sound and monotone on random ontologies") {
    std::mt19937_64 rng(testing::kSeed + 3);
    testing::RandomShape shape;
    shape.min_axioms = 5;
    shape.max_axioms = 5;
    for (int k = 0; k < 60; ++k) {
        const Ontology o = testing::random_ontology(rng, shape);
        const auto a = saturate(o, {}, RuleSystem::A);
        const auto b = saturate(o, {}, RuleSystem::B);
        CHECK(star_property_violations(a).empty());
        const auto& u = a.universe();
        for (ConceptId l = 0; l < u.size(); ++l) {
            for (ConceptId r = 0; r < u.size(); ++r) {
                CHECK(a.entails(u.at(l), u.at(r)) == b.entails(u.at(l), u.at(r)));
            }
        }

        for (int s = 0; s < 5; ++s) {
            auto model = oracle::sample_model(o, {}, rng);
            if (!model) continue;
            REQUIRE(oracle::is_model(*model, o));
            for (auto i : a.conclusions()) {
                const auto lhs = oracle::eval_concept(*model, u.at(i.lhs));
                const auto rhs = oracle::eval_concept(*model, u.at(i.rhs));
                for (std::size_t x = 0; x < model->size; ++x) CHECK((!lhs[x] || rhs[x]));
            }
        }

        Ontology bigger = o;
        bigger.add(testing::random_axiom(rng, shape));
        const auto c = saturate(bigger, {}, RuleSystem::A);
        for (auto i : a.conclusions()) CHECK(c.derived(u.at(i.lhs), u.at(i.rhs)));
    }
}

TEST_CASE("saturation is deterministic") {
    std::mt19937_64 rng(testing::kSeed + 4);
    testing::RandomShape shape;
    for (int k = 0; k < 20; ++k) {
        const Ontology o = testing::random_ontology(rng, shape);
        for (auto sys : {RuleSystem::A, RuleSystem::B}) {
            const auto x = saturate(o, {}, sys);
            const auto y = saturate(o, {}, sys);
            CHECK(x.conclusions() == y.conclusions());
            CHECK(x.inferences().size() == y.inferences().size());
        }
    }
}
