#include <doctest.h>

#include <random>

#include "eldef/definability.hpp"
#include "eldef/oracle.hpp"
#include "eldef/reasoner.hpp"
#include "eldef/syntax.hpp"
#include "generators.hpp"

using namespace eldef;
using namespace eldef::oracle;

namespace {

Concept n(const char* s) { return Concept::name(s); }
Symbol cn(const char* s) { return Symbol::concept_name(s); }

Ontology cuisine() {
    return parse_ontology(
        "Ontology(SubClassOf(ObjectIntersectionOf(Dumplings Entree) Gnocci) SubClassOf(Gnocci Dumplings) "
        "SubClassOf(Dumplings Entree))");
}

Interpretation single(bool gnocci) {
    Interpretation i;
    i.size = 1;
    i.concepts["Dumplings"] = {true};
    i.concepts["Entree"] = {true};
    i.concepts["Gnocci"] = {gnocci};
    return i;
}

}  // namespace

TEST_CASE("eval_concept") {
    Interpretation i;
    i.size = 2;
    i.concepts["A"] = {false, true};
    i.roles["r"] = {{1, 0}};
    CHECK(eval_concept(i, Concept::top()) == Extension{true, true});
    CHECK(eval_concept(i, Concept::bottom()) == Extension{false, false});
    // Element ids are 0-based: 1 ↦ 0 and 2 ↦ 1 relative to a 1-based domain.
    Interpretation j;
    j.size = 2;
    j.concepts["A"] = {true, false};
    j.roles["r"] = {{1, 0}};
    CHECK(eval_concept(j, Concept::exists("r", n("A"))) == Extension{false, true});
    CHECK(eval_concept(j, n("Unmapped")) == Extension{false, false});

    std::mt19937_64 rng(testing::kSeed + 10);
    const Signature sig{cn("A"), cn("B"), Symbol::role("r")};
    for (int k = 0; k < 100; ++k) {
        const auto r = random_interpretation(sig, rng);
        const auto a = eval_concept(r, n("A"));
        const auto b = eval_concept(r, n("B"));
        const auto ab = eval_concept(r, make_conj(n("A"), n("B")));
        for (std::size_t x = 0; x < r.size; ++x) CHECK(ab[x] == (a[x] && b[x]));
        CHECK(r.size >= 1);
        CHECK(r.size <= 4);
    }
}

TEST_CASE("is_model") {
    std::mt19937_64 rng(testing::kSeed + 11);
    for (int k = 0; k < 20; ++k) CHECK(is_model(random_interpretation({cn("A")}, rng), Ontology()));
    CHECK(is_model(single(true), cuisine()));
    CHECK_FALSE(is_model(single(false), cuisine()));
}

TEST_CASE("canonical_model") {
    const Ontology bot({Axiom::sub(n("A"), Concept::bottom())});
    const auto m = canonical_model(bot, {n("A")});
    CHECK(m.inconsistent(*m.element_of(n("A"))));
    CHECK(m.entails(n("A"), n("Anything")));
    CHECK(m.entails(n("A"), Concept::exists("r", n("B"))));

    const auto c = canonical_model(cuisine(), {});
    CHECK(eval_concept(c.interpretation(), n("Gnocci"))[*c.element_of(n("Dumplings"))]);
    CHECK(c.self_consistent(cuisine()));
    CHECK_THROWS_AS(c.entails(n("Absent"), n("Gnocci")), std::invalid_argument);
}

TEST_CASE("canonical model agrees with the reasoner on random ontologies") {
    std::mt19937_64 rng(testing::kSeed + 12);
    testing::RandomShape shape;
    for (int k = 0; k < 60; ++k) {
        const Ontology o = testing::random_ontology(rng, shape);
        const auto log = saturate(o, {}, RuleSystem::A);
        const auto m = canonical_model(o, {});
        CHECK(m.self_consistent(o));
        const auto& u = log.universe();
        for (ConceptId l = 0; l < u.size(); ++l) {
            for (ConceptId r = 0; r < u.size(); ++r) CHECK(log.entails(u.at(l), u.at(r)) == m.entails(u.at(l), u.at(r)));
        }
    }
}

TEST_CASE("enumerate_sigma_concepts") {
    CHECK(enumerate_sigma_concepts({cn("A")}, 0, 2) == std::vector<Concept>{Concept::top(), Concept::bottom(), n("A")});
    CHECK(enumerate_sigma_concepts({cn("Entree")}, 0, 5) ==
          std::vector<Concept>{Concept::top(), Concept::bottom(), n("Entree")});
    const auto e = enumerate_sigma_concepts({Symbol::role("r"), cn("D_1")}, 1, 3);
    const Concept rd = Concept::exists("r", n("D_1"));
    CHECK(std::count(e.begin(), e.end(), rd) == 1);
    CHECK(std::count(e.begin(), e.end(), make_conj(n("D_1"), rd)) == 1);
    const std::set<Concept> unique(e.begin(), e.end());
    CHECK(unique.size() == e.size());
    for (const auto& c : e) {
        CHECK(is_canonical(c));
        CHECK(c.depth() <= 1);
        CHECK(enumeration_weight(c) <= 3);
    }
    CHECK(enumerate_sigma_concepts({cn("A")}, 0, 0).empty());
}

TEST_CASE("brute_force_define") {
    const auto g = brute_force_define(cuisine(), make_conj(n("Dumplings"), n("Entree")), {cn("Gnocci")}, 1, 4);
    CHECK(g.count(n("Gnocci")) == 1);

    const auto fam = generate_family(1);
    const auto f = brute_force_define(fam.ontology, fam.target, fam.sigma, 2, 8);
    for (const char* a : {"D_1", "D_2"}) {
        for (const char* b : {"D_1", "D_2"}) {
            CHECK(f.count(make_conj(Concept::exists("r", n(a)), Concept::exists("s", n(b)))) == 1);
        }
    }

    CHECK(brute_force_define(cuisine(), n("Dumplings"), {}, 2, 6).empty());
}

TEST_CASE("sampled models are models and respect entailments") {
    std::mt19937_64 rng(testing::kSeed + 13);
    testing::RandomShape shape;
    for (int k = 0; k < 40; ++k) {
        const Ontology o = testing::random_ontology(rng, shape);
        const auto log = saturate(o, {}, RuleSystem::B);
        for (int s = 0; s < 5; ++s) {
            const auto i = sample_model(o, {}, rng);
            if (!i) continue;
            CHECK(is_model(*i, o));
            for (auto inc : log.conclusions()) {
                const auto l = eval_concept(*i, log.universe().at(inc.lhs));
                const auto r = eval_concept(*i, log.universe().at(inc.rhs));
                for (std::size_t x = 0; x < i->size; ++x) CHECK((!l[x] || r[x]));
            }
        }
    }
}
