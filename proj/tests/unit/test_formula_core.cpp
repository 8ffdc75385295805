#include "doctest.h"

#include "hanfkit/errors.hpp"
#include "hanfkit/metrics.hpp"
#include "hanfkit/parser.hpp"
#include "hanfkit/predicates.hpp"

#include "support/gen.hpp"
#include "support/reference.hpp"

using namespace hanfkit;

namespace {
Signature test_sig() { return Signature{{{"E", 2}, {"U", 1}}}; }
}

TEST_CASE("parse maps directly onto constructors") {
    PredicateCollection preds;
    auto e = parse("(ex x (E x x))", test_sig(), preds);
    CHECK(e->kind == NodeKind::ExistsStruct);
    CHECK(e->name == "x");
    CHECK(e->kids[0]->kind == NodeKind::RelAtom);
    CHECK(e->kids[0]->name == "E");
    CHECK(e->kids[0]->vars == std::vector<std::string>{"x", "x"});
}

TEST_CASE("and desugars via De Morgan") {
    PredicateCollection preds;
    auto e = parse("(and (U x) (U y))", test_sig(), preds);
    CHECK(print(e) == "(not (or (not (U x)) (not (U y))))");
    auto f = parse("(implies (U x) (U y))", test_sig(), preds);
    CHECK(print(f) == "(or (not (U x)) (U y))");
    auto g = parse("(forall x (U x))", test_sig(), preds);
    CHECK(print(g) == "(not (ex x (not (U x))))");
}

TEST_CASE("the prime sentence from the examples parses") {
    PredicateCollection preds;
    auto e =
        parse("(pred prime (+ (# (x) (= x x)) (# (x y) (E x y))))", test_sig(), preds);
    CHECK(e->kind == NodeKind::PredApp);
    CHECK(e->name == "prime");
    Metrics m = metrics(*e);
    CHECK(m.free.structure.empty());
    CHECK(m.free.number.empty());
    CHECK(m.bw == 2);
    CHECK(m.br == 1);
}

TEST_CASE("parse errors carry positions and reasons") {
    PredicateCollection preds;
    CHECK_THROWS_AS(parse("(ex x (F x))", test_sig(), preds), ParseError);
    CHECK_THROWS_AS(parse("(pred nosuchpred 1)", test_sig(), preds), ParseError);
    CHECK_THROWS_AS(parse("(E x)", test_sig(), preds), ParseError);          // arity
    CHECK_THROWS_AS(parse("(# (x x) (U x))", test_sig(), preds), ParseError); // repeated binder
    CHECK_THROWS_AS(parse("(or (U x)", test_sig(), preds), ParseError);
    CHECK_THROWS_AS(parse("(sphere t:deadbeef:2:0:1:0 x)", test_sig(), preds), ParseError);
}

TEST_CASE("free variables follow the inductive rules") {
    PredicateCollection preds;
    auto count = parse("(# (y) (E x y))", test_sig(), preds);
    FreeVars fv = free_vars(*count);
    CHECK(fv.structure == std::set<std::string>{"x"});
    CHECK(fv.number.empty());

    auto nv = make_num_var("k");
    fv = free_vars(*nv);
    CHECK(fv.structure.empty());
    CHECK(fv.number == std::set<std::string>{"k"});

    auto pa = parse("(pred leq %k (# (y) (U y)))", test_sig(), preds);
    fv = free_vars(*pa);
    CHECK(fv.structure.empty());
    CHECK(fv.number == std::set<std::string>{"k"});
}

TEST_CASE("free variables match a reference recursion on random ASTs") {
    testing::ExprGen gen({}, 20240901);
    for (int i = 0; i < 600; ++i) {
        ExprPtr e = i % 2 == 0 ? gen.formula() : gen.term();
        std::set<std::string> sv, nv;
        testing::ref_free(*e, sv, nv);
        FreeVars fv = free_vars(*e);
        CHECK(fv.structure == sv);
        CHECK(fv.number == nv);
    }
}

TEST_CASE("metrics of the paper example sentence") {
    PredicateCollection preds;
    auto e = parse("(ex x (pred prime (# (y) (E x y))))", test_sig(), preds);
    Metrics m = metrics(*e);
    CHECK(m.nqr == 0);
    CHECK(m.br == 2);
    CHECK(m.bw == 1);
    CHECK(m.size == 16);
}

TEST_CASE("metrics base cases") {
    Metrics m = metrics(*make_num_var("k"));
    CHECK(m.nqr == 0);
    CHECK(m.br == 0);
    CHECK(m.bw == 0);

    auto e = make_exists_num("k", make_pred("prime", {make_num_var("k")}));
    m = metrics(*e);
    CHECK(m.nqr == 1);
    CHECK(m.br == 0);
    CHECK(m.bw == 0);
}

TEST_CASE("metrics agree with an independent fold on random ASTs") {
    testing::ExprGen gen({}, 77);
    for (int i = 0; i < 1000; ++i) {
        ExprPtr e = i % 2 == 0 ? gen.formula() : gen.term();
        auto [size, nqr, br, bw] = testing::ref_metrics(*e);
        Metrics m = metrics(*e);
        CHECK(m.size == size);
        CHECK(m.nqr == nqr);
        CHECK(m.br == br);
        CHECK(m.bw == bw);
    }
}

TEST_CASE("parse after print is the identity on ASTs") {
    PredicateCollection preds;
    Signature sig = test_sig();
    testing::ExprGen gen({}, 31337);
    for (int i = 0; i < 400; ++i) {
        ExprPtr e = i % 2 == 0 ? gen.formula() : gen.term();
        std::string text = print(e);
        ExprPtr back = parse(text, sig, preds);
        CHECK(print(back) == text);
    }
}

TEST_CASE("is_hnf accepts oc-type conditions and rejects structure quantifiers") {
    PredicateCollection preds;
    CHECK_FALSE(is_hnf(*parse("(ex x (U x))", test_sig(), preds)));
    CHECK(is_hnf(*parse("(pred prime (+ 1 2))", test_sig(), preds)));
    CHECK(is_hnf(*parse("(exn %k (pred eq %k 3))", test_sig(), preds)));
    CHECK_FALSE(is_hnf(*parse("(# (x) (U x))", test_sig(), preds)));  // a term, not a formula
    CHECK_FALSE(is_hnf(*parse("(pred exists (# (x) (U x)))", test_sig(), preds)));
    CHECK(is_hnf(*make_true()));
    CHECK(is_false_literal(*make_false()));
}

TEST_CASE("oc-condition counting splits at Boolean connectives") {
    PredicateCollection preds;
    auto e = parse("(or (pred prime 5) (not (pred prime 5)))", test_sig(), preds);
    CHECK(count_oc_conditions(*e) == 1);
    auto f = parse("(or (pred prime 5) (exn %k (pred eq %k 2)))", test_sig(), preds);
    CHECK(count_oc_conditions(*f) == 2);
}
