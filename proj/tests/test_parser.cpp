#include <doctest.h>

#include "helpers.hpp"
#include "symint/parser.hpp"

using namespace symint;
using namespace symint::testing;

TEST_SUITE_BEGIN("parser");

TEST_CASE("jet syntax variants agree") {
    JetSpace sp = JetSpace::make({"t", "x"}, {"u"});
    CHECK(parse("D(u,x:3)", sp).equals(parse("D(u,x,x,x)", sp)));
    CHECK(parse("D(u,x:2,t)", sp).equals(parse("D(u,t,x,x)", sp)));
}

TEST_CASE("full equation parse has the expected monomial structure") {
    JetSpace sp = JetSpace::make({"t", "x"}, {"u"});
    Expr e = parse("u*D(u,x) + D(u,t)", sp);
    CHECK(e.num().t.size() == 2);
    Expr bl = parse("a*D(u,x:5) + b*(D(u,x:2)+D(u,x:4)) + D(u,x:3) + u*D(u,x) + D(u,t)", sp);
    CHECK(bl.num().t.size() == 6);
    CHECK(bl.degree_in(symtab::instance().jet(sp.dep_named("u"), {0, 5})) == 1);
}

TEST_CASE("greedy rational exponents") {
    JetSpace sp = JetSpace::make({"t", "x"}, {"u"});
    Expr e = parse("u^-4/3", sp);
    CHECK(e.num().t.begin()->first.exponent(sp.dep_named("u")) == rat_of(-4, 3));
    // exponent stops at the slash only when an integer follows
    Expr f = parse("u^2/t", sp);
    CHECK(f.num().t.begin()->first.exponent(sp.dep_named("u")) == rat(2));
    CHECK(f.num().t.begin()->first.exponent(sp.indep_named("t")) == rat(-1));
}

TEST_CASE("errors carry a position") {
    JetSpace sp = JetSpace::make({"t", "x"}, {"u"});
    CHECK_THROWS_AS(parse("u + ", sp), parse_error);
    CHECK_THROWS_AS(parse("D(w,x)", sp), parse_error);   // undeclared dependent
    CHECK_THROWS_AS(parse("D(u,y)", sp), parse_error);   // undeclared independent
    CHECK_THROWS_AS(parse("u @ t", sp), parse_error);
    try {
        parse("u + (t", sp);
        CHECK(false);
    } catch (const parse_error& pe) {
        CHECK(pe.position > 0);
    }
}

TEST_CASE("print/parse round trip on normal forms") {
    JetSpace sp = JetSpace::make({"t", "x"}, {"u"});
    std::vector<std::string> cases = {
        "u*D(u,x) + D(u,t)",
        "a*D(u,x:5) + b*(D(u,x:2)+D(u,x:4)) + D(u,x:3) + u*D(u,x) + D(u,t)",
        "1/2*u^2 - delta",
        "u^-4/3 + 3/7*t*x",
        "(u+t)/(g1+g2*t)",
        "-u - 2*t",
    };
    for (const auto& s : cases) {
        Expr e = parse(s, sp);
        CHECK(parse(to_dsl(e), sp).equals(e));
    }
    // and on random expressions
    std::vector<std::string> syms = {"t", "x", "u", "alpha"};
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>> jets = {
        {"u", {{"x", 1}}}, {"u", {{"t", 2}}}};
    for (int i = 0; i < 200; ++i) {
        Ast a = rand_ast(syms, jets, 5);
        Expr e;
        try {
            e = ast_to_expr(a, sp);
        } catch (const domain_error&) {
            continue;
        }
        CHECK(parse(to_dsl(e), sp).equals(e));
    }
}

TEST_SUITE_END();
