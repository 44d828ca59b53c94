#ifndef SYMINT_POLYROOTS_HPP
#define SYMINT_POLYROOTS_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "symint/rational.hpp"

namespace symint {

// Root of a rational-coefficient polynomial in exact or numeric form.
// Quadratic-factor roots keep the surd: value = (a ± sqrt(disc))/b with
// rational a, b and integer-free rational discriminant disc (negative for a
// complex pair).
struct PolyRoot {
    enum class form { rational, surd, numeric };
    form kind;
    rat value;                      // rational roots
    rat surd_a, surd_b, surd_disc;  // (surd_a ± sqrt(surd_disc)) / surd_b
    std::complex<double> approx;    // numeric roots (and filled for all kinds)
    int multiplicity = 1;
    bool is_real() const;
    bool is_rational() const { return kind == form::rational; }
    std::string str() const;
};

// Factorization of a univariate rational polynomial into the content, linear
// factors from rational roots, quadratic surd factors, and an unfactored
// residual (whose roots are located numerically).
struct PolyFactorization {
    std::vector<rat> coeffs;  // ascending, input polynomial
    rat content;
    std::vector<std::pair<rat, int>> rational_roots;  // root, multiplicity
    std::vector<std::array<rat, 3>> quadratics;       // monic r^2 + b r + c
    std::vector<rat> residual;                        // monic, degree >= 3 or empty
    std::vector<PolyRoot> roots;                      // all roots, multiplicity-expanded
    std::string factored_text(const std::string& sym) const;
};

PolyFactorization factor_rational_poly(const std::vector<rat>& coeffs);

// Durand-Kerner iteration for the numeric residual roots.
std::vector<std::complex<double>> numeric_roots(const std::vector<rat>& coeffs);

std::string poly_text(const std::vector<rat>& coeffs, const std::string& sym);

}  // namespace symint

#endif
