#ifndef SYMINT_CALCULUS_HPP
#define SYMINT_CALCULUS_HPP

#include <map>
#include <optional>
#include <vector>

#include "symint/expr.hpp"
#include "symint/parser.hpp"

namespace symint {

// Extension hooks for the total derivative:
//  - atom_fn: an atom (typically the independent variable of a reduced
//    equation) is secretly a function of the base variables, so its total
//    derivative is the derivative of that expression;
//  - special: derivative values for special atoms, per independent variable.
struct deriv_ctx {
    std::map<int, Expr> atom_fn;
    std::map<int, std::map<int, Expr>> special;
};

Expr total_derivative(const Expr& e, int y, const deriv_ctx& ctx = {});

// Iterated total derivative along a multi-index over `dirs` (parallel counts).
Expr total_derivative_multi(const Expr& e, const std::vector<int>& dirs,
                            const std::vector<int>& mindex, const deriv_ctx& ctx = {});

// Formal partial derivative with respect to a single atom.
Expr partial_derivative(const Expr& e, int a);

// Replace every jet of `func0` by the matching total derivative of
// `replacement`; derivatives are taken along the function's own arguments.
Expr substitute_function(const Expr& e, int func0, const Expr& replacement,
                         const deriv_ctx& ctx = {});

// Rename a dependent variable: jets of `from` become the same jets of `to`
// (both functions must have the same number of arguments).
Expr rename_function(const Expr& e, int from0, int to0);

// Highest jet of func0 occurring in e: largest total order, ties broken by
// more derivatives in later arguments. Returns -1 when absent.
int top_jet(const Expr& e, int func0);
int max_jet_order(const Expr& e, int func0);

// Solve H = 0 for the given jet atom; H must be degree 1 in it.
Expr solve_linear(const Expr& H, int jet_atom);

// Variational derivative with respect to func0 over a single independent
// variable; identically zero exactly on total derivatives.
Expr euler_operator(const Expr& e, int func0);

// Term-wise antiderivative: F with D_s F = e, constant omitted. Returns
// nullopt when the peeling rules fail; the result is always back-checked.
std::optional<Expr> antiderivative_total(const Expr& e, int func0);

}  // namespace symint

#endif
