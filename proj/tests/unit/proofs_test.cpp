#include <doctest.h>

#include <random>

#include "eldef/definability.hpp"
#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"
#include "generators.hpp"

using namespace eldef;

namespace {

Concept n(const char* s) { return Concept::name(s); }

// Every premise is produced by an earlier step and the last step is the goal.
bool well_formed(const Proof& p) {
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        for (auto q : p.steps[i].premises) {
            if (q >= i) return false;
        }
    }
    return !p.steps.empty();
}

}  // namespace

TEST_CASE("reflexive goal over the empty ontology has one proof") {
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        const auto log = saturate(Ontology(), {n("A")}, sys);
        const auto ps = proofs(log, *log.inclusion(n("A"), n("A")));
        REQUIRE(ps.size() == 1);
        REQUIRE(ps[0].steps.size() == 1);
        CHECK(ps[0].goal().rule == (sys == RuleSystem::A ? Rule::R0 : Rule::S0));
    }
}

TEST_CASE("reflexive goals always have exactly one single-step proof") {
    std::mt19937_64 rng(testing::kSeed + 5);
    testing::RandomShape shape;
    for (int k = 0; k < 20; ++k) {
        const auto log = saturate(testing::random_ontology(rng, shape), {n("A")}, RuleSystem::A);
        std::size_t single = 0;
        for_each_proof(log, *log.inclusion(n("A"), n("A")), {}, [&](const Proof& p) {
            CHECK(well_formed(p));
            if (p.steps.size() == 1) ++single;
            return true;
        });
        CHECK(single == 1);
    }
}

TEST_CASE("family copy goal has proofs through both name chains") {
    const auto fam = generate_family(1);
    const auto copy = rename_copy(fam.ontology, n("A_1"), fam.sigma);
    Ontology joint = fam.ontology;
    joint.add_all(copy.ontology);
    const auto log = saturate(joint, {n("A_1"), copy.concept_copy}, RuleSystem::B);
    const auto goal = log.inclusion(n("A_1"), copy.concept_copy);
    REQUIRE(goal);
    const auto ps = proofs(log, *goal);
    CHECK(ps.size() >= 2);
    bool via_d1 = false;
    bool via_d2 = false;
    for (const auto& p : ps) {
        CHECK(well_formed(p));
        for (const auto& s : p.steps) {
            if (s.rhs == n("D_1")) via_d1 = true;
            if (s.rhs == n("D_2")) via_d2 = true;
        }
    }
    CHECK(via_d1);
    CHECK(via_d2);
}

TEST_CASE("cuisine proof uses the conjunction axiom") {
    const Ontology o = parse_ontology(
        "Ontology(SubClassOf(ObjectIntersectionOf(Dumplings Entree) Gnocci) SubClassOf(Gnocci Dumplings) "
        "SubClassOf(Dumplings Entree))");
    const Axiom key = Axiom::sub(make_conj(n("Dumplings"), n("Entree")), n("Gnocci"));
    for (auto sys : {RuleSystem::A, RuleSystem::B}) {
        const auto log = saturate(o, {}, sys);
        bool uses = false;
        const auto count = for_each_proof(log, *log.inclusion(n("Dumplings"), n("Gnocci")), {}, [&](const Proof& p) {
            for (const auto& s : p.steps) {
                if (s.axiom == key) uses = true;
            }
            return true;
        });
        CHECK(count.complete);
        CHECK(count.proofs >= 1);
        CHECK(uses);
    }
}

TEST_CASE("proof enumeration honours caps and early stop") {
    const auto fam = generate_family(2);
    const auto log = saturate(fam.ontology, {}, RuleSystem::A);
    ProofLimits three;
    three.max_proofs = 3;
    const auto many = std::find_if(log.conclusions().begin(), log.conclusions().end(), [&](Inclusion i) {
        return for_each_proof(log, i, three, [](const Proof&) { return true; }).proofs == 3;
    });
    REQUIRE(many != log.conclusions().end());
    const Inclusion goal = *many;
    ProofLimits one;
    one.max_proofs = 1;
    const auto capped = for_each_proof(log, goal, one, [](const Proof&) { return true; });
    CHECK(capped.proofs == 1);
    CHECK_FALSE(capped.complete);
    std::size_t seen = 0;
    for_each_proof(log, goal, {}, [&](const Proof&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("render_proof prints one line per inference") {
    const auto log = saturate(Ontology({Axiom::sub(n("A"), n("B"))}), {}, RuleSystem::A);
    const auto ps = proofs(log, *log.inclusion(n("A"), n("B")));
    REQUIRE(ps.size() == 1);
    CHECK(render_proof(ps[0]) == "R_sub: SubClassOf(A B)  [SubClassOf(A B)]\n  R_0: SubClassOf(A A)\n");
}

TEST_CASE("star property on random logs") {
    std::mt19937_64 rng(testing::kSeed + 6);
    testing::RandomShape shape;
    for (int k = 0; k < 100; ++k) {
        const Ontology o = testing::random_ontology(rng, shape);
        const auto log = saturate(o, {testing::random_concept(rng, shape, 0)}, RuleSystem::A);
        CHECK(star_property_violations(log).empty());
    }
}
