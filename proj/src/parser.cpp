#include "symint/parser.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace symint {

JetSpace JetSpace::make(const std::vector<std::string>& indep_names,
                        const std::vector<std::string>& dep_names) {
    JetSpace s;
    auto& tab = symtab::instance();
    for (const auto& n : indep_names) s.indeps.push_back(tab.indep(n));
    for (const auto& n : dep_names) s.deps.push_back(tab.function(n, s.indeps));
    // uniqueness of names
    std::vector<std::string> all = indep_names;
    all.insert(all.end(), dep_names.begin(), dep_names.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) throw domain_error("duplicate variable name: " + all[i]);
    return s;
}

int JetSpace::indep_named(const std::string& n) const {
    for (int a : indeps)
        if (atom(a).name == n) return a;
    return -1;
}

int JetSpace::dep_named(const std::string& n) const {
    for (int a : deps)
        if (atom(a).name == n) return a;
    return -1;
}

bool JetSpace::has_atom(int a) const {
    for (int i : indeps)
        if (i == a) return true;
    for (int d : deps)
        if (d == a) return true;
    return false;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", pos);
    }
    bool at_int() {
        return std::isdigit(static_cast<unsigned char>(peek()));
    }
    mpz_class read_int() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected an integer", pos);
        return mpz_class(s.substr(start, pos - start));
    }
    std::string read_name() {
        skip();
        size_t start = pos;
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            throw parse_error("expected a name", pos);
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    // rational := int ("/" int)?   The denominator is consumed only when an
    // integer actually follows, so "1/x" leaves the slash to the term level.
    rat read_rational(bool allow_sign) {
        skip();
        bool negative = false;
        if (allow_sign && peek() == '-') {
            ++pos;
            negative = true;
        }
        mpz_class n = read_int();
        mpz_class d = 1;
        size_t save = pos;
        if (eat('/')) {
            if (at_int()) {
                d = read_int();
                if (d == 0) throw parse_error("zero denominator in rational literal", pos);
            } else {
                pos = save;
            }
        }
        rat q(negative ? -n : n, d);
        q.canonicalize();
        return q;
    }
};

struct Parser {
    Lexer lx;

    Ast expr() {
        Ast node = term();
        while (true) {
            if (lx.eat('+')) {
                Ast r;
                r.k = Ast::kind::add;
                r.kids = {std::move(node), term()};
                node = std::move(r);
            } else if (lx.eat('-')) {
                Ast r;
                r.k = Ast::kind::sub;
                r.kids = {std::move(node), term()};
                node = std::move(r);
            } else {
                return node;
            }
        }
    }

    Ast term() {
        Ast node = factor();
        while (true) {
            if (lx.eat('*')) {
                Ast r;
                r.k = Ast::kind::mul;
                r.kids = {std::move(node), factor()};
                node = std::move(r);
            } else if (lx.eat('/')) {
                Ast r;
                r.k = Ast::kind::div;
                r.kids = {std::move(node), factor()};
                node = std::move(r);
            } else {
                return node;
            }
        }
    }

    Ast factor() {
        Ast b = base();
        if (lx.eat('^')) {
            Ast r;
            r.k = Ast::kind::pow;
            r.value = lx.read_rational(true);
            r.kids = {std::move(b)};
            return r;
        }
        return b;
    }

    Ast base() {
        char c = lx.peek();
        if (c == '-') {
            lx.eat('-');
            Ast r;
            r.k = Ast::kind::neg;
            r.kids = {factor()};
            return r;
        }
        if (c == '(') {
            lx.eat('(');
            Ast inner = expr();
            lx.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Ast r;
            r.k = Ast::kind::number;
            r.value = lx.read_rational(false);
            return r;
        }
        std::string name = lx.read_name();
        if (name == "D" && lx.peek() == '(') {
            lx.eat('(');
            Ast r;
            r.k = Ast::kind::jet;
            r.name = lx.read_name();
            if (!lx.eat(',')) throw parse_error("D(...) needs at least one derivative variable", lx.pos);
            do {
                std::string v = lx.read_name();
                int mult = 1;
                if (lx.eat(':')) {
                    mpz_class m = lx.read_int();
                    if (!m.fits_sint_p() || m <= 0)
                        throw parse_error("derivative multiplicity must be a positive integer", lx.pos);
                    mult = static_cast<int>(m.get_si());
                }
                r.derivs.emplace_back(v, mult);
            } while (lx.eat(','));
            lx.expect(')');
            return r;
        }
        Ast r;
        r.k = Ast::kind::symbol;
        r.name = name;
        return r;
    }
};

}  // namespace

Ast parse_ast(const std::string& text) {
    Parser p{Lexer{text}};
    Ast a = p.expr();
    p.lx.skip();
    if (p.lx.pos != text.size()) throw parse_error("unexpected trailing input", p.lx.pos);
    return a;
}

namespace {

int resolve_jet(const Ast& a, const JetSpace& space, size_t pos_hint = 0) {
    int dep = space.dep_named(a.name);
    if (dep < 0) throw parse_error("undeclared dependent variable: " + a.name, pos_hint);
    std::vector<int> mindex(space.indeps.size(), 0);
    for (const auto& [vname, mult] : a.derivs) {
        int v = space.indep_named(vname);
        if (v < 0) throw parse_error("undeclared independent variable: " + vname, pos_hint);
        for (size_t i = 0; i < space.indeps.size(); ++i)
            if (space.indeps[i] == v) mindex[i] += mult;
    }
    return symtab::instance().jet(dep, mindex);
}

}  // namespace

Expr ast_to_expr(const Ast& a, const JetSpace& space) {
    switch (a.k) {
        case Ast::kind::number:
            return Expr::constant(a.value);
        case Ast::kind::symbol: {
            int id = space.indep_named(a.name);
            if (id >= 0) return Expr::atom(id);
            id = space.dep_named(a.name);
            if (id >= 0) return Expr::atom(id);
            return Expr::atom(symtab::instance().param(a.name));
        }
        case Ast::kind::jet:
            return Expr::atom(resolve_jet(a, space));
        case Ast::kind::add:
            return ast_to_expr(a.kids[0], space).add(ast_to_expr(a.kids[1], space));
        case Ast::kind::sub:
            return ast_to_expr(a.kids[0], space).sub(ast_to_expr(a.kids[1], space));
        case Ast::kind::mul:
            return ast_to_expr(a.kids[0], space).mul(ast_to_expr(a.kids[1], space));
        case Ast::kind::div:
            return ast_to_expr(a.kids[0], space).div(ast_to_expr(a.kids[1], space));
        case Ast::kind::pow:
            return ast_to_expr(a.kids[0], space).pow(a.value);
        case Ast::kind::neg:
            return ast_to_expr(a.kids[0], space).neg();
    }
    throw domain_error("unreachable AST kind");
}

double ast_eval(const Ast& a, const JetSpace& space, const std::map<int, double>& bind) {
    auto leaf = [&](const std::string& name, const Ast* jet_node) -> double {
        int id;
        if (jet_node) {
            id = resolve_jet(*jet_node, space);
        } else {
            id = space.indep_named(name);
            if (id < 0) id = space.dep_named(name);
            if (id < 0) id = symtab::instance().param(name);
        }
        auto it = bind.find(id);
        if (it == bind.end()) throw domain_error("ast_eval: unbound " + name);
        return it->second;
    };
    switch (a.k) {
        case Ast::kind::number: return a.value.get_d();
        case Ast::kind::symbol: return leaf(a.name, nullptr);
        case Ast::kind::jet: return leaf(a.name, &a);
        case Ast::kind::add: return ast_eval(a.kids[0], space, bind) + ast_eval(a.kids[1], space, bind);
        case Ast::kind::sub: return ast_eval(a.kids[0], space, bind) - ast_eval(a.kids[1], space, bind);
        case Ast::kind::mul: return ast_eval(a.kids[0], space, bind) * ast_eval(a.kids[1], space, bind);
        case Ast::kind::div: return ast_eval(a.kids[0], space, bind) / ast_eval(a.kids[1], space, bind);
        case Ast::kind::pow: return std::pow(ast_eval(a.kids[0], space, bind), a.value.get_d());
        case Ast::kind::neg: return -ast_eval(a.kids[0], space, bind);
    }
    throw domain_error("unreachable AST kind");
}

rat ast_eval_rat(const Ast& a, const JetSpace& space, const std::map<int, rat>& bind) {
    auto leaf = [&](const std::string& name, const Ast* jet_node) -> rat {
        int id;
        if (jet_node) {
            id = resolve_jet(*jet_node, space);
        } else {
            id = space.indep_named(name);
            if (id < 0) id = space.dep_named(name);
            if (id < 0) id = symtab::instance().param(name);
        }
        auto it = bind.find(id);
        if (it == bind.end()) throw domain_error("ast_eval_rat: unbound " + name);
        return it->second;
    };
    switch (a.k) {
        case Ast::kind::number: return a.value;
        case Ast::kind::symbol: return leaf(a.name, nullptr);
        case Ast::kind::jet: return leaf(a.name, &a);
        case Ast::kind::add: return ast_eval_rat(a.kids[0], space, bind) + ast_eval_rat(a.kids[1], space, bind);
        case Ast::kind::sub: return ast_eval_rat(a.kids[0], space, bind) - ast_eval_rat(a.kids[1], space, bind);
        case Ast::kind::mul: return ast_eval_rat(a.kids[0], space, bind) * ast_eval_rat(a.kids[1], space, bind);
        case Ast::kind::div: {
            rat d = ast_eval_rat(a.kids[1], space, bind);
            if (d == 0) throw domain_error("ast_eval_rat: division by zero");
            return ast_eval_rat(a.kids[0], space, bind) / d;
        }
        case Ast::kind::pow: {
            if (!is_integer(a.value)) throw domain_error("ast_eval_rat: fractional exponent");
            return pow_rat(ast_eval_rat(a.kids[0], space, bind), to_long(a.value));
        }
        case Ast::kind::neg: return -ast_eval_rat(a.kids[0], space, bind);
    }
    throw domain_error("unreachable AST kind");
}

// ---------------------------------------------------------------- printing

namespace {

std::string atom_dsl(int id) {
    const atom_info& a = atom(id);
    if (a.kind != atom_kind::jet || a.order == 0) return a.name;
    std::string out = "D(" + a.name;
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (a.mindex[i] == 0) continue;
        out += "," + atom(a.args[i]).name;
        if (a.mindex[i] > 1) out += ":" + std::to_string(a.mindex[i]);
    }
    return out + ")";
}

std::string mono_dsl(const Mono& m, const rat& coeff) {
    std::string out;
    rat c = coeff < 0 ? rat(-coeff) : coeff;
    bool wrote = false;
    if (c != 1 || m.empty()) {
        out += to_string(c);
        wrote = true;
    }
    for (const auto& [a, e] : m.f) {
        if (wrote) out += "*";
        out += atom_dsl(a);
        if (e != 1) out += "^" + to_string(e);
        wrote = true;
    }
    return out;
}

}  // namespace

std::string to_dsl(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.t) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += mono_dsl(m, c);
    }
    return out;
}

std::string to_dsl(const Expr& e) {
    std::string out = e.num().t.size() > 1 && !e.den().empty() ? "(" + to_dsl(e.num()) + ")"
                                                               : to_dsl(e.num());
    for (const auto& [f, k] : e.den())
        out += "*(" + to_dsl(f) + ")^-" + std::to_string(k);
    return out;
}

}  // namespace symint
