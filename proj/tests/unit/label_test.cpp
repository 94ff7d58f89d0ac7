#include <doctest.h>

#include "eldef/label.hpp"

using namespace eldef;

namespace {

Concept n(const char* s) { return Concept::name(s); }

std::set<Concept> set_of(std::initializer_list<Concept> cs) {
    std::set<Concept> out;
    for (const auto& c : cs) out.insert(canonicalize(c));
    return out;
}

}  // namespace

TEST_CASE("dnf distributes conjunction and existentials over disjunction") {
    const auto d = LabelExpr::disj({LabelExpr::leaf(n("D_1")), LabelExpr::leaf(n("D_2"))});
    const auto e = LabelExpr::conj({LabelExpr::exists("r", d), LabelExpr::exists("s", d)});
    const auto out = dnf(e);
    CHECK(out.size() == 4);
    CHECK(out.disjuncts() == set_of({Concept::conj({Concept::exists("r", n("D_1")), Concept::exists("s", n("D_1"))}),
                                     Concept::conj({Concept::exists("r", n("D_1")), Concept::exists("s", n("D_2"))}),
                                     Concept::conj({Concept::exists("r", n("D_2")), Concept::exists("s", n("D_1"))}),
                                     Concept::conj({Concept::exists("r", n("D_2")), Concept::exists("s", n("D_2"))})}));
}

TEST_CASE("epsilon laws") {
    const auto eps = LabelExpr::epsilon();
    const auto d = LabelExpr::leaf(n("D"));
    CHECK(dnf(LabelExpr::disj({eps, d})).disjuncts() == set_of({n("D")}));
    CHECK(dnf(LabelExpr::exists("r", eps)).is_epsilon());
    CHECK(dnf(LabelExpr::conj({eps, d})).is_epsilon());
    CHECK(dnf(LabelExpr::disj({})).is_epsilon());
}

TEST_CASE("products are canonical and duplicate free") {
    LabelAlgebra alg;
    const DisjConcept a = alg.unite(alg.leaf(n("A")), alg.leaf(n("B")));
    const DisjConcept p = alg.product(a, a);
    CHECK(p.disjuncts() == set_of({n("A"), n("B"), make_conj(n("A"), n("B"))}));
    CHECK(alg.product(a, alg.leaf(Concept::top())) == a);
    CHECK_FALSE(alg.truncated());
}

TEST_CASE("caps truncate and flag") {
    LabelLimits limits;
    limits.max_conjuncts = 2;
    LabelAlgebra alg(limits);
    const DisjConcept a = alg.unite(alg.leaf(n("A")), alg.leaf(n("B")));
    const DisjConcept c = alg.unite(a, alg.leaf(n("C")));
    CHECK(c.size() == 2);
    CHECK(alg.truncated());

    LabelLimits small;
    small.max_concept_size = 2;
    LabelAlgebra alg2(small);
    const DisjConcept deep = alg2.wrap("r", alg2.wrap("r", alg2.leaf(n("A"))));
    CHECK(deep.is_epsilon());
    CHECK(alg2.truncated());
}

TEST_CASE("to_dl_string") {
    LabelAlgebra alg;
    CHECK(to_dl_string(DisjConcept::epsilon()) == "ε");
    CHECK(to_dl_string(alg.unite(alg.leaf(n("A")), alg.leaf(n("B")))) == "A ⊔ B");
}
