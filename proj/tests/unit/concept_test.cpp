#include <doctest.h>

#include <random>

#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"
#include "generators.hpp"

using namespace eldef;

namespace {

Concept c(const char* text) { return parse_concept(text); }

}  // namespace

TEST_CASE("signature_of") {
    CHECK(signature_of(c("ObjectSomeValuesFrom(hasIngredient Meat)")) ==
          Signature{Symbol::role("hasIngredient"), Symbol::concept_name("Meat")});
    CHECK(signature_of(Concept::top()).empty());
    CHECK(signature_of(c("ObjectSomeValuesFrom(r ObjectIntersectionOf(A owl:Nothing))")) ==
          Signature{Symbol::role("r"), Symbol::concept_name("A")});
}

TEST_CASE("canonicalize") {
    const Concept a = Concept::name("A");
    const Concept b = Concept::name("B");
    CHECK(canonicalize(Concept::conj({a, a})) == a);
    CHECK(canonicalize(Concept::conj({b, Concept::conj({a, Concept::top()})})) == Concept::conj({a, b}));
    CHECK(canonicalize(Concept::exists("r", Concept::conj({a, a}))) == Concept::exists("r", a));
    CHECK(canonicalize(Concept::conj({Concept::top(), Concept::top()})) == Concept::top());
}

TEST_CASE("concept order puts constructors first") {
    CHECK(Concept::top() < Concept::bottom());
    CHECK(Concept::bottom() < Concept::name("A"));
    CHECK(Concept::name("Z") < Concept::exists("a", Concept::top()));
    CHECK(Concept::exists("a", Concept::top()) < Concept::conj({Concept::name("A"), Concept::name("B")}));
}

TEST_CASE("canonical form properties on random concepts") {
    std::mt19937_64 rng(testing::kSeed);
    testing::RandomShape shape;
    for (int k = 0; k < 300; ++k) {
        const Concept x = testing::random_concept(rng, shape, 0);
        const Concept cx = canonicalize(x);
        CHECK(is_canonical(cx));
        CHECK(canonicalize(cx) == cx);
        CHECK(signature_of(cx) == signature_of(x));
        const Ontology empty;
        CHECK(entails(empty, Axiom::equiv(x, cx), RuleSystem::A));
        // Shuffled conjunction order gives the same canonical form.
        if (cx.kind() == ConceptKind::Conj) {
            std::vector<Concept> ops(cx.operands().begin(), cx.operands().end());
            std::shuffle(ops.begin(), ops.end(), rng);
            CHECK(canonicalize(Concept::conj(ops)) == cx);
        }
    }
}

TEST_CASE("subconcept_closure") {
    const Concept a = Concept::name("A");
    const Concept b = Concept::name("B");
    const Concept rb = Concept::exists("r", b);
    CHECK(subconcept_closure(Ontology({Axiom::sub(a, rb)}), {}) ==
          std::set<Concept>{a, rb, b, Concept::top(), Concept::bottom()});
    const Concept cd = make_conj(Concept::name("C"), Concept::name("D"));
    CHECK(subconcept_closure(Ontology(), {cd}) ==
          std::set<Concept>{cd, Concept::name("C"), Concept::name("D"), Concept::top(), Concept::bottom()});

    const Ontology cuisine = parse_ontology(
        "Ontology(SubClassOf(ObjectIntersectionOf(Dumplings Entree) Gnocci) SubClassOf(Gnocci Dumplings) "
        "SubClassOf(Dumplings Entree))");
    const auto closure = subconcept_closure(cuisine, {});
    for (const char* n : {"Dumplings", "Entree", "Gnocci"}) CHECK(closure.count(Concept::name(n)) == 1);
    CHECK(closure.count(make_conj(Concept::name("Dumplings"), Concept::name("Entree"))) == 1);
}

TEST_CASE("subconcept_closure is monotone") {
    std::mt19937_64 rng(testing::kSeed + 1);
    testing::RandomShape shape;
    for (int k = 0; k < 100; ++k) {
        Ontology o = testing::random_ontology(rng, shape);
        const auto small = subconcept_closure(o, {});
        o.add(testing::random_axiom(rng, shape));
        const Concept extra = testing::random_concept(rng, shape, 0);
        const auto big = subconcept_closure(o, {extra});
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
}

TEST_CASE("symbol names reject the reserved character") {
    CHECK(is_valid_symbol_name("Gnocci"));
    CHECK(is_valid_symbol_name("A_1.x-2"));
    CHECK_FALSE(is_valid_symbol_name("A@c"));
    CHECK_FALSE(is_valid_symbol_name(""));
}
