#ifndef SYMINT_EXPR_HPP
#define SYMINT_EXPR_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symint/atoms.hpp"
#include "symint/rational.hpp"

namespace symint {

// A power product of atoms with nonzero rational exponents, sorted by atom id.
struct Mono {
    std::vector<std::pair<int, rat>> f;

    bool empty() const { return f.empty(); }
    rat exponent(int atom) const;
    Mono without(int atom) const;
    Mono mul(const Mono& o) const;
    Mono pow(const rat& e) const;  // scales all exponents
    bool integral() const;         // all exponents integers >= 0
};

bool operator==(const Mono& a, const Mono& b);
bool operator<(const Mono& a, const Mono& b);

// Sparse multivariate Laurent polynomial: sum of rational-coefficient
// monomials. The zero polynomial has an empty term map.
struct Poly {
    std::map<Mono, rat> t;

    static Poly zero() { return {}; }
    static Poly constant(const rat& c);
    static Poly atom(int id, const rat& e = rat(1));

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t.size() == 1; }
    std::optional<rat> as_constant() const;

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly neg() const;
    Poly mul(const Poly& o) const;
    Poly scale(const rat& c) const;
    Poly mul_mono(const Mono& m, const rat& c) const;
    Poly pow_uint(unsigned long e) const;

    // gcd of coefficients, carrying the sign of the leading (map-largest) term
    rat content() const;
    // true iff every monomial has nonnegative integer exponents
    bool integral() const;
    // exact division; returns false when o does not divide *this (or when the
    // structure is unsupported, in which case the quotient is left unreduced)
    bool try_divide(const Poly& o, Poly& q) const;
    // maximal degree of the given atom (0 when absent)
    rat degree_in(int atom) const;
    bool contains(int atom) const;
    bool contains_if(const std::function<bool(int)>& pred) const;
};

bool operator==(const Poly& a, const Poly& b);
bool operator<(const Poly& a, const Poly& b);

// Canonical expression: a Laurent polynomial numerator divided by a factored
// denominator of primitive non-monomial polynomials. Quotients by monomials
// are folded into the numerator as negative exponents, so the denominator map
// is empty along the bulk of the symbolic pipeline.
class Expr {
public:
    Expr() = default;
    explicit Expr(Poly n) : num_(std::move(n)) {}
    Expr(Poly n, std::map<Poly, int> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static Expr zero() { return Expr(); }
    static Expr constant(const rat& c) { return Expr(Poly::constant(c)); }
    static Expr atom(int id, const rat& e = rat(1));

    const Poly& num() const { return num_; }
    const std::map<Poly, int>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    std::optional<rat> as_constant() const;
    bool is_monomial() const { return den_.empty() && num_.is_monomial(); }

    Expr add(const Expr& o) const;
    Expr sub(const Expr& o) const;
    Expr neg() const;
    Expr mul(const Expr& o) const;
    Expr scale(const rat& c) const;
    Expr inverse() const;
    Expr div(const Expr& o) const { return mul(o.inverse()); }
    Expr pow_int(long e) const;
    Expr pow(const rat& e) const;  // rational exponents need a monomial base

    bool contains(int atom) const;
    bool contains_if(const std::function<bool(int)>& pred) const;
    rat degree_in(int atom) const;  // numerator degree; denominator must not contain atom

    // exact structural equality of the canonical form
    bool equals(const Expr& o) const { return num_ == o.num_ && den_ == o.den_; }
    // semantic equality via cross-multiplication (robust to denominator splits)
    bool same(const Expr& o) const;
    // true iff *this == q * o for some nonzero rational q (returned)
    std::optional<rat> rational_multiple_of(const Expr& o) const;

    // divide by rational content and flip sign so the leading numerator
    // coefficient is positive: a scale-normal form for printing equations
    Expr scale_normalized() const;

    // substitute an atom by an expression (exponents of the atom must be
    // integers unless the replacement is a monomial)
    Expr subst_atom(int atom, const Expr& v) const;
    // simultaneous substitution
    Expr subst_atoms(const std::map<int, Expr>& sub) const;

    // numerator coefficients of powers of `atom` (denominator must not
    // contain it); missing powers are absent from the map
    std::map<rat, Expr> coeffs_in(int atom) const;
    // split every numerator monomial into (sub-monomial over atoms selected
    // by pred) -> remaining coefficient
    std::map<Mono, Expr> collect(const std::function<bool(int)>& pred) const;

    double eval_double(const std::map<int, double>& bind) const;
    rat eval_rat(const std::map<int, rat>& bind) const;  // integer exponents only

private:
    void reduce();

    Poly num_;
    std::map<Poly, int> den_;
};

bool operator==(const Expr& a, const Expr& b);
inline Expr operator+(const Expr& a, const Expr& b) { return a.add(b); }
inline Expr operator-(const Expr& a, const Expr& b) { return a.sub(b); }
inline Expr operator*(const Expr& a, const Expr& b) { return a.mul(b); }
inline Expr operator-(const Expr& a) { return a.neg(); }

}  // namespace symint

#endif
