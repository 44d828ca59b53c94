#include "symint/polyroots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace symint {

bool PolyRoot::is_real() const {
    switch (kind) {
        case form::rational: return true;
        case form::surd: return surd_disc >= 0;
        case form::numeric: return std::abs(approx.imag()) < 1e-9 * (1 + std::abs(approx.real()));
    }
    return false;
}

std::string PolyRoot::str() const {
    switch (kind) {
        case form::rational:
            return to_string(value);
        case form::surd: {
            std::ostringstream os;
            os << "(" << to_string(surd_a) << " +/- sqrt(" << to_string(surd_disc) << "))/"
               << to_string(surd_b);
            return os.str();
        }
        case form::numeric: {
            std::ostringstream os;
            os.precision(6);
            os << approx.real();
            if (std::abs(approx.imag()) > 1e-12) os << (approx.imag() > 0 ? "+" : "") << approx.imag() << "i";
            return os.str();
        }
    }
    return "?";
}

namespace {

std::vector<rat> deflate(const std::vector<rat>& c, const rat& root) {
    // synthetic division by (x - root); remainder assumed zero
    std::vector<rat> q(c.size() - 1);
    rat carry = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + root * carry;
    }
    return q;
}

rat eval_poly(const std::vector<rat>& c, const rat& x) {
    rat v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    if (a == 0 || a > 1000000000000L) return out;  // huge constants go to the numeric path
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const std::vector<rat>& coeffs) {
    size_t n = coeffs.size() - 1;
    std::vector<std::complex<double>> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].get_d();
    for (auto& x : c) x /= c.back();
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1, 0);
    for (size_t i = 0; i < n; ++i) {
        z[i] = w;
        w *= seed;
    }
    auto peval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> d(1, 0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) d *= (z[i] - z[j]);
            std::complex<double> step = peval(z[i]) / d;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

PolyFactorization factor_rational_poly(const std::vector<rat>& coeffs_in) {
    PolyFactorization out;
    out.coeffs = coeffs_in;
    while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
    std::vector<rat> c = out.coeffs;
    if (c.empty() || (c.size() == 1)) {
        out.content = c.empty() ? rat(0) : c[0];
        return out;
    }

    // strip trailing zero constant terms as roots at 0
    int zero_mult = 0;
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.rational_roots.emplace_back(rat(0), zero_mult);

    // the reported factors are all monic, so the content is the leading coefficient
    out.content = out.coeffs.back();

    // clear denominators and integer content for the rational-root search
    mpz_class den_lcm = 1;
    for (const auto& q : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> ic(c.size());
    mpz_class g = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        rat q = c[i] * rat(den_lcm);
        ic[i] = q.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic[i].get_mpz_t());
    }
    if (g != 0)
        for (auto& z : ic) z /= g;
    if (ic.back() < 0)
        for (auto& z : ic) z = -z;
    std::vector<rat> work(ic.size());
    for (size_t i = 0; i < ic.size(); ++i) work[i] = rat(ic[i]);

    // rational roots: p/q with p | constant, q | leading
    bool found = true;
    while (work.size() > 1 && found) {
        found = false;
        if (work.front() == 0) {
            // re-strip zeros introduced by deflation (should not happen, but safe)
            work.erase(work.begin());
            bool merged = false;
            for (auto& [r, m] : out.rational_roots)
                if (r == 0) m += 1, merged = true;
            if (!merged) out.rational_roots.emplace_back(rat(0), 1);
            found = true;
            continue;
        }
        auto ps = divisors(work.front().get_num());
        auto qs = divisors(work.back().get_num());
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    rat cand(sign * p, q);
                    cand.canonicalize();
                    if (eval_poly(work, cand) == 0) {
                        work = deflate(work, cand);
                        bool merged = false;
                        for (auto& [r, m] : out.rational_roots)
                            if (r == cand) m += 1, merged = true;
                        if (!merged) out.rational_roots.emplace_back(cand, 1);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }

    // remaining factor
    if (work.size() == 3) {
        rat b = work[1] / work[2], cc = work[0] / work[2];
        out.quadratics.push_back({rat(1), b, cc});
    } else if (work.size() == 2) {
        // linear with irrational...: cannot happen (rational root), keep safe
        out.rational_roots.emplace_back(-work[0] / work[1], 1);
    } else if (work.size() > 3) {
        for (auto& q : work) q /= work.back();
        out.residual = work;
    }

    std::sort(out.rational_roots.begin(), out.rational_roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [r, m] : out.rational_roots) {
        PolyRoot pr;
        pr.kind = PolyRoot::form::rational;
        pr.value = r;
        pr.multiplicity = m;
        pr.approx = {r.get_d(), 0.0};
        for (int i = 0; i < m; ++i) out.roots.push_back(pr);
    }
    for (const auto& q : out.quadratics) {
        // r = (-b +- sqrt(b^2 - 4c)) / 2
        rat b = q[1], cc = q[2];
        rat disc = b * b - 4 * cc;
        PolyRoot pr;
        pr.kind = PolyRoot::form::surd;
        pr.surd_a = -b;
        pr.surd_b = rat(2);
        pr.surd_disc = disc;
        double sq = std::sqrt(std::abs(disc.get_d()));
        if (disc >= 0) {
            pr.approx = {(-b.get_d() + sq) / 2, 0.0};
            out.roots.push_back(pr);
            pr.approx = {(-b.get_d() - sq) / 2, 0.0};
            out.roots.push_back(pr);
        } else {
            pr.approx = {-b.get_d() / 2, sq / 2};
            out.roots.push_back(pr);
            pr.approx = {-b.get_d() / 2, -sq / 2};
            out.roots.push_back(pr);
        }
    }
    if (!out.residual.empty()) {
        for (const auto& z : numeric_roots(out.residual)) {
            PolyRoot pr;
            pr.kind = PolyRoot::form::numeric;
            pr.approx = z;
            out.roots.push_back(pr);
        }
    }
    return out;
}

std::string poly_text(const std::vector<rat>& coeffs, const std::string& sym) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        rat a = coeffs[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        rat mag = a < 0 ? rat(-a) : a;
        if (mag != 1 || i == 0) os << to_string(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << sym;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string PolyFactorization::factored_text(const std::string& sym) const {
    std::ostringstream os;
    if (content != 1) os << to_string(content) << "*";
    for (const auto& [r, m] : rational_roots) {
        os << "(" << sym;
        if (r > 0)
            os << " - " << to_string(r);
        else if (r < 0)
            os << " + " << to_string(rat(-r));
        os << ")";
        if (m > 1) os << "^" << m;
    }
    for (const auto& q : quadratics) {
        std::vector<rat> qc = {q[2], q[1], q[0]};
        os << "(" << poly_text(qc, sym) << ")";
    }
    if (!residual.empty()) os << "(" << poly_text(residual, sym) << ")";
    return os.str();
}

}  // namespace symint
