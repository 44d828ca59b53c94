#ifndef SYMINT_PARSER_HPP
#define SYMINT_PARSER_HPP

#include <string>
#include <vector>

#include "symint/expr.hpp"

namespace symint {

// Declares the variables an equation lives over. Dependent variables are
// function symbols over the independent ones; anything else appearing in the
// DSL is an opaque parameter.
struct JetSpace {
    std::vector<int> indeps;  // atom ids
    std::vector<int> deps;    // function 0-jet atom ids

    static JetSpace make(const std::vector<std::string>& indep_names,
                         const std::vector<std::string>& dep_names);
    int indep_named(const std::string& n) const;
    int dep_named(const std::string& n) const;
    bool has_atom(int a) const;
};

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

// Raw parse tree, kept around so tests can compare the unnormalized reading
// of an input against its canonical form.
struct Ast {
    enum class kind { number, symbol, jet, add, sub, mul, div, pow, neg };
    kind k;
    rat value;                         // number; pow exponent
    std::string name;                  // symbol / jet dependent name
    std::vector<std::pair<std::string, int>> derivs;  // jet: (indep name, multiplicity)
    std::vector<Ast> kids;
};

Ast parse_ast(const std::string& text);
Expr ast_to_expr(const Ast& a, const JetSpace& space);
inline Expr parse(const std::string& text, const JetSpace& space) {
    return ast_to_expr(parse_ast(text), space);
}

double ast_eval(const Ast& a, const JetSpace& space, const std::map<int, double>& bind);
rat ast_eval_rat(const Ast& a, const JetSpace& space, const std::map<int, rat>& bind);

// Deterministic DSL rendering; parse(to_dsl(e)) == e on canonical forms.
std::string to_dsl(const Expr& e);
std::string to_dsl(const Poly& p);

}  // namespace symint

#endif
