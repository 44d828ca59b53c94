#ifndef SYMINT_TEST_HELPERS_HPP
#define SYMINT_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "symint/calculus.hpp"
#include "symint/parser.hpp"

namespace symint::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline rat rand_rat() {
    long den = rand_int(1, 6);
    return rat_of(rand_int(-8, 8), den);
}

inline rat rand_nonzero_rat() {
    rat q = rand_rat();
    return q == 0 ? rat(1) : q;
}

// Random raw AST over the given leaves: depth-bounded, integer exponents,
// division only by nonzero numeric literals to keep evaluation total.
inline Ast rand_ast(const std::vector<std::string>& symbols,
                    const std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>>& jets,
                    int depth) {
    Ast a;
    if (depth <= 0 || rand_int(0, 5) == 0) {
        int pick = static_cast<int>(rand_int(0, static_cast<long>(symbols.size() + jets.size())));
        if (pick < static_cast<int>(symbols.size())) {
            a.k = Ast::kind::symbol;
            a.name = symbols[pick];
        } else if (pick < static_cast<int>(symbols.size() + jets.size())) {
            const auto& j = jets[pick - symbols.size()];
            a.k = Ast::kind::jet;
            a.name = j.first;
            a.derivs = j.second;
        } else {
            a.k = Ast::kind::number;
            a.value = rand_rat();
        }
        return a;
    }
    switch (rand_int(0, 5)) {
        case 0:
            a.k = Ast::kind::add;
            break;
        case 1:
            a.k = Ast::kind::sub;
            break;
        case 2:
        case 3:
            a.k = Ast::kind::mul;
            break;
        case 4: {
            a.k = Ast::kind::pow;
            a.value = rat(rand_int(0, 3));
            a.kids.push_back(rand_ast(symbols, jets, depth - 1));
            return a;
        }
        default: {
            a.k = Ast::kind::div;
            a.kids.push_back(rand_ast(symbols, jets, depth - 1));
            Ast d;
            d.k = Ast::kind::number;
            d.value = rand_nonzero_rat();
            a.kids.push_back(d);
            return a;
        }
    }
    a.kids.push_back(rand_ast(symbols, jets, depth - 1));
    a.kids.push_back(rand_ast(symbols, jets, depth - 1));
    return a;
}

}  // namespace symint::testing

#endif
