#ifndef SYMINT_SERIES_HPP
#define SYMINT_SERIES_HPP

#include <map>
#include <optional>
#include <set>

#include "symint/calculus.hpp"

namespace symint {

// Truncated expansion in powers of a single grading atom (the shifted
// expansion variable chi for ODE work, or a singular manifold function for
// PDE work). Coefficients never contain the grading atom itself. `valid_to`
// bounds the exponents that are exact; nullopt means the series is exact.
struct Series {
    int var = -1;
    std::map<rat, Expr> c;
    std::optional<rat> valid_to;

    static Series zero(int var) { return Series{var, {}, std::nullopt}; }
    static Series term(int var, const rat& e, Expr coeff);

    bool is_zero() const { return c.empty(); }
    std::optional<rat> min_exponent() const;  // nullopt when identically zero so far
    void set_term(const rat& e, Expr coeff);
    Expr coefficient(const rat& e) const;  // throws when e exceeds valid_to
    void truncate(const rat& cut);

    Series add(const Series& o) const;
    Series sub(const Series& o) const;
    Series scale(const Expr& k) const;
    Series mul(const Series& o, const rat& cut) const;
    Series ipow(long n, const rat& cut) const;
};

// d/dy of a series: grade_rule provides D_y(var) for the grading atom; the
// coefficients are differentiated with the ordinary total derivative.
Series series_derive(const Series& s, int y, const Expr& dvar, const deriv_ctx& ctx = {});

// Evaluate an expression polynomial in the jets of func0 on a series, keeping
// exponents up to `order`. grade_rule maps each function argument to D_y(var).
// Throws when `order` exceeds what the stored truncation supports.
Series series_substitute(const Expr& e, int func0, const Series& s, const rat& order,
                         const std::map<int, Expr>& grade_rule, const deriv_ctx& ctx = {});

// The spec-facing truncated Puiseux series: exponent of term k is p + k*step,
// indices 0..N, with a record of which indices carry arbitrary constants.
struct PuiseuxSeries {
    int var = -1;
    rat p;
    rat step = rat(1);
    int trunc_n = 0;
    std::map<int, Expr> coeff;
    std::set<int> arbitrary;

    Series to_series() const;
    rat exponent(int k) const { return p + step * k; }
};

// The canonical shifted expansion variable.
int chi_atom();

}  // namespace symint

#endif
