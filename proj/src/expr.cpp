#include "symint/expr.hpp"

#include <algorithm>
#include <cmath>

namespace symint {

// ---------------------------------------------------------------- Mono

rat Mono::exponent(int atom) const {
    for (const auto& [a, e] : f)
        if (a == atom) return e;
    return rat(0);
}

Mono Mono::without(int atom) const {
    Mono r;
    r.f.reserve(f.size());
    for (const auto& p : f)
        if (p.first != atom) r.f.push_back(p);
    return r;
}

Mono Mono::mul(const Mono& o) const {
    Mono r;
    r.f.reserve(f.size() + o.f.size());
    size_t i = 0, j = 0;
    while (i < f.size() && j < o.f.size()) {
        if (f[i].first < o.f[j].first) {
            r.f.push_back(f[i++]);
        } else if (f[i].first > o.f[j].first) {
            r.f.push_back(o.f[j++]);
        } else {
            rat e = f[i].second + o.f[j].second;
            if (e != 0) r.f.emplace_back(f[i].first, e);
            ++i, ++j;
        }
    }
    while (i < f.size()) r.f.push_back(f[i++]);
    while (j < o.f.size()) r.f.push_back(o.f[j++]);
    return r;
}

Mono Mono::pow(const rat& e) const {
    if (e == 0) return {};
    Mono r = *this;
    for (auto& p : r.f) p.second *= e;
    return r;
}

bool Mono::integral() const {
    for (const auto& [a, e] : f)
        if (e < 0 || !is_integer(e)) return false;
    return true;
}

bool operator==(const Mono& a, const Mono& b) { return a.f == b.f; }

bool operator<(const Mono& a, const Mono& b) {
    size_t n = std::min(a.f.size(), b.f.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.f[i].first != b.f[i].first) return a.f[i].first < b.f[i].first;
        int c = cmp(a.f[i].second, b.f[i].second);
        if (c != 0) return c < 0;
    }
    return a.f.size() < b.f.size();
}

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const rat& c) {
    Poly p;
    if (c != 0) p.t.emplace(Mono{}, c);
    return p;
}

Poly Poly::atom(int id, const rat& e) {
    if (e == 0) return constant(rat(1));
    Poly p;
    Mono m;
    m.f.emplace_back(id, e);
    p.t.emplace(std::move(m), rat(1));
    return p;
}

bool Poly::is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first.empty());
}

std::optional<rat> Poly::as_constant() const {
    if (t.empty()) return rat(0);
    if (t.size() == 1 && t.begin()->first.empty()) return t.begin()->second;
    return std::nullopt;
}

Poly Poly::add(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t) {
        auto it = r.t.find(m);
        if (it == r.t.end()) {
            r.t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
    Poly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
}

Poly Poly::mul(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : t)
        for (const auto& [m2, c2] : o.t) {
            Mono m = m1.mul(m2);
            rat c = c1 * c2;
            auto it = r.t.find(m);
            if (it == r.t.end()) {
                r.t.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.t.erase(it);
            }
        }
    return r;
}

Poly Poly::scale(const rat& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& [m, v] : r.t) v *= c;
    return r;
}

Poly Poly::mul_mono(const Mono& m, const rat& c) const {
    if (c == 0) return {};
    Poly r;
    for (const auto& [m1, c1] : t) r.t.emplace(m1.mul(m), c1 * c);
    return r;
}

Poly Poly::pow_uint(unsigned long e) const {
    Poly r = constant(rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return r;
}

rat Poly::content() const {
    if (t.empty()) return rat(0);
    mpz_class gn = 0, gd = 1;
    for (const auto& [m, c] : t) {
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(gd.get_mpz_t(), gd.get_mpz_t(), c.get_den().get_mpz_t());
    }
    rat g(gn, gd);
    g.canonicalize();
    if (t.rbegin()->second < 0) g = -g;
    return g;
}

bool Poly::integral() const {
    for (const auto& [m, c] : t)
        if (!m.integral()) return false;
    return true;
}

rat Poly::degree_in(int atom) const {
    rat d(0);
    for (const auto& [m, c] : t) {
        rat e = m.exponent(atom);
        if (e > d) d = e;
    }
    return d;
}

bool Poly::contains(int atom) const {
    for (const auto& [m, c] : t)
        for (const auto& [a, e] : m.f)
            if (a == atom) return true;
    return false;
}

bool Poly::contains_if(const std::function<bool(int)>& pred) const {
    for (const auto& [m, c] : t)
        for (const auto& [a, e] : m.f)
            if (pred(a)) return true;
    return false;
}

namespace {

// View p as a univariate polynomial in `v` with Poly coefficients.
std::map<long, Poly> by_var(const Poly& p, int v, bool& ok) {
    std::map<long, Poly> r;
    ok = true;
    for (const auto& [m, c] : p.t) {
        rat e = m.exponent(v);
        if (!is_integer(e) || e < 0) {
            ok = false;
            return r;
        }
        long k = to_long(e);
        Poly& slot = r[k];
        Mono rest = m.without(v);
        auto it = slot.t.find(rest);
        if (it == slot.t.end())
            slot.t.emplace(std::move(rest), c);
        else
            it->second += c;
    }
    for (auto it = r.begin(); it != r.end();) {
        for (auto jt = it->second.t.begin(); jt != it->second.t.end();)
            jt = (jt->second == 0) ? it->second.t.erase(jt) : std::next(jt);
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    }
    return r;
}

}  // namespace

bool Poly::try_divide(const Poly& o, Poly& q) const {
    q = Poly::zero();
    if (o.is_zero()) return false;
    if (is_zero()) return true;
    if (auto c = o.as_constant()) {
        q = scale(rat(1) / *c);
        return true;
    }
    if (o.is_monomial()) {
        const auto& [m, c] = *o.t.begin();
        q = mul_mono(m.pow(rat(-1)), rat(1) / c);
        return true;
    }
    // main variable: the atom of highest degree in the divisor
    int v = -1;
    rat best(-1);
    for (const auto& [m, c] : o.t)
        for (const auto& [a, e] : m.f)
            if (e > best) best = e, v = a;
    if (v < 0) return false;
    bool ok1 = false, ok2 = false;
    auto P = by_var(*this, v, ok1);
    auto D = by_var(o, v, ok2);
    if (!ok1 || !ok2 || D.empty()) return false;
    long dd = D.rbegin()->first;
    const Poly& dl = D.rbegin()->second;
    Poly acc;
    while (!P.empty()) {
        long dp = P.rbegin()->first;
        if (dp < dd) return false;
        Poly t;
        if (!P.rbegin()->second.try_divide(dl, t)) return false;
        // q += t * v^(dp-dd);  P -= t*v^(dp-dd) * D
        acc = acc.add(t.mul(Poly::atom(v, rat(dp - dd))));
        for (const auto& [k, dc] : D) {
            Poly sub = t.mul(dc);
            long kk = k + dp - dd;
            auto it = P.find(kk);
            if (it == P.end()) {
                Poly s = sub.neg();
                if (!s.is_zero()) P.emplace(kk, std::move(s));
            } else {
                it->second = it->second.sub(sub);
                if (it->second.is_zero()) P.erase(it);
            }
        }
    }
    q = acc;
    return true;
}

bool operator==(const Poly& a, const Poly& b) { return a.t == b.t; }

bool operator<(const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
    auto i = a.t.begin();
    auto j = b.t.begin();
    for (; i != a.t.end(); ++i, ++j) {
        if (i->first < j->first) return true;
        if (j->first < i->first) return false;
        int c = cmp(i->second, j->second);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---------------------------------------------------------------- Expr

Expr Expr::atom(int id, const rat& e) { return Expr(Poly::atom(id, e)); }

std::optional<rat> Expr::as_constant() const {
    if (!den_.empty()) return std::nullopt;
    return num_.as_constant();
}

void Expr::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::map<Poly, int> nd;
    for (auto& [f, k] : den_) {
        if (k <= 0 || f.is_zero()) throw domain_error("division by zero");
        rat c = f.content();
        Poly fp = f.scale(rat(1) / c);
        // fold rational content and monomial factors into the numerator
        num_ = num_.scale(pow_rat(rat(1) / c, k));
        if (fp.is_monomial()) {
            const auto& [m, mc] = *fp.t.begin();
            num_ = num_.mul_mono(m.pow(rat(-k)), pow_rat(rat(1) / mc, k));
            continue;
        }
        auto it = nd.find(fp);
        if (it == nd.end())
            nd.emplace(std::move(fp), k);
        else
            it->second += k;
    }
    den_ = std::move(nd);
    // cancel factors dividing the numerator
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end();) {
            Poly q;
            if (num_.try_divide(it->first, q)) {
                num_ = std::move(q);
                if (--it->second == 0) it = den_.erase(it);
                changed = true;
                break;
            }
            ++it;
        }
    }
}

Expr Expr::add(const Expr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.empty() && o.den_.empty()) return Expr(num_.add(o.num_));
    // common denominator: union with max powers
    std::map<Poly, int> cd = den_;
    for (const auto& [f, k] : o.den_) {
        auto it = cd.find(f);
        if (it == cd.end())
            cd.emplace(f, k);
        else
            it->second = std::max(it->second, k);
    }
    Poly a = num_, b = o.num_;
    for (const auto& [f, k] : cd) {
        auto ia = den_.find(f);
        int ka = (ia == den_.end()) ? 0 : ia->second;
        for (int i = ka; i < k; ++i) a = a.mul(f);
        auto ib = o.den_.find(f);
        int kb = (ib == o.den_.end()) ? 0 : ib->second;
        for (int i = kb; i < k; ++i) b = b.mul(f);
    }
    return Expr(a.add(b), std::move(cd));
}

Expr Expr::sub(const Expr& o) const { return add(o.neg()); }

Expr Expr::neg() const {
    Expr r = *this;
    r.num_ = r.num_.neg();
    return r;
}

Expr Expr::mul(const Expr& o) const {
    if (is_zero() || o.is_zero()) return Expr();
    std::map<Poly, int> d = den_;
    for (const auto& [f, k] : o.den_) {
        auto it = d.find(f);
        if (it == d.end())
            d.emplace(f, k);
        else
            it->second += k;
    }
    return Expr(num_.mul(o.num_), std::move(d));
}

Expr Expr::scale(const rat& c) const {
    if (c == 0) return Expr();
    Expr r = *this;
    r.num_ = r.num_.scale(c);
    return r;
}

Expr Expr::inverse() const {
    if (is_zero()) throw domain_error("division by zero expression");
    Poly n = Poly::constant(rat(1));
    for (const auto& [f, k] : den_)
        for (int i = 0; i < k; ++i) n = n.mul(f);
    std::map<Poly, int> d;
    d.emplace(num_, 1);
    return Expr(std::move(n), std::move(d));
}

Expr Expr::pow_int(long e) const {
    if (e == 0) {
        if (is_zero()) throw domain_error("0^0");
        return constant(rat(1));
    }
    if (e < 0) return inverse().pow_int(-e);
    Expr r = constant(rat(1));
    Expr base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1) r = r.mul(base);
        u >>= 1;
        if (u) base = base.mul(base);
    }
    return r;
}

Expr Expr::pow(const rat& e) const {
    if (is_integer(e)) return pow_int(to_long(e));
    if (!is_monomial()) throw domain_error("fractional power of a non-monomial expression");
    const auto& [m, c] = *num_.t.begin();
    // coefficient^e must be an exact rational
    rat cr;
    {
        long den = to_long(rat(e.get_den()));
        auto root = root_rat(c, static_cast<unsigned long>(den));
        if (!root) throw domain_error("fractional power with no exact rational root: " + to_string(c));
        cr = pow_rat(*root, to_long(rat(e.get_num())));
    }
    Poly p;
    p.t.emplace(m.pow(e), cr);
    return Expr(std::move(p));
}

bool Expr::contains(int atom) const {
    if (num_.contains(atom)) return true;
    for (const auto& [f, k] : den_)
        if (f.contains(atom)) return true;
    return false;
}

bool Expr::contains_if(const std::function<bool(int)>& pred) const {
    if (num_.contains_if(pred)) return true;
    for (const auto& [f, k] : den_)
        if (f.contains_if(pred)) return true;
    return false;
}

rat Expr::degree_in(int atom) const {
    for (const auto& [f, k] : den_)
        if (f.contains(atom)) throw domain_error("degree_in: atom occurs in a denominator");
    return num_.degree_in(atom);
}

bool Expr::same(const Expr& o) const {
    if (equals(o)) return true;
    Poly a = num_, b = o.num_;
    for (const auto& [f, k] : o.den_)
        for (int i = 0; i < k; ++i) a = a.mul(f);
    for (const auto& [f, k] : den_)
        for (int i = 0; i < k; ++i) b = b.mul(f);
    return a == b;
}

std::optional<rat> Expr::rational_multiple_of(const Expr& o) const {
    if (is_zero() && o.is_zero()) return rat(1);
    if (is_zero() || o.is_zero()) return std::nullopt;
    Poly a = num_, b = o.num_;
    for (const auto& [f, k] : o.den_)
        for (int i = 0; i < k; ++i) a = a.mul(f);
    for (const auto& [f, k] : den_)
        for (int i = 0; i < k; ++i) b = b.mul(f);
    if (a.t.size() != b.t.size()) return std::nullopt;
    auto i = a.t.begin();
    auto j = b.t.begin();
    rat q = i->second / j->second;
    for (; i != a.t.end(); ++i, ++j) {
        if (!(i->first == j->first)) return std::nullopt;
        if (i->second != q * j->second) return std::nullopt;
    }
    return q;
}

Expr Expr::scale_normalized() const {
    if (is_zero()) return *this;
    rat c = num_.content();
    return scale(rat(1) / c);
}

Expr Expr::subst_atom(int atom, const Expr& v) const {
    std::map<int, Expr> m;
    m.emplace(atom, v);
    return subst_atoms(m);
}

Expr Expr::subst_atoms(const std::map<int, Expr>& sub) const {
    auto hit = [&](int a) { return sub.count(a) > 0; };
    if (!contains_if(hit)) return *this;
    Expr result;
    for (const auto& [m, c] : num_.t) {
        Expr term = Expr::constant(c);
        for (const auto& [a, e] : m.f) {
            auto it = sub.find(a);
            if (it == sub.end()) {
                term = term.mul(Expr::atom(a, e));
            } else if (is_integer(e)) {
                term = term.mul(it->second.pow_int(to_long(e)));
            } else {
                term = term.mul(it->second.pow(e));
            }
        }
        result = result.add(term);
    }
    for (const auto& [f, k] : den_) {
        Expr fe;
        for (const auto& [m, c] : f.t) {
            Expr term = Expr::constant(c);
            for (const auto& [a, e] : m.f) {
                auto it = sub.find(a);
                if (it == sub.end())
                    term = term.mul(Expr::atom(a, e));
                else if (is_integer(e))
                    term = term.mul(it->second.pow_int(to_long(e)));
                else
                    term = term.mul(it->second.pow(e));
            }
            fe = fe.add(term);
        }
        result = result.mul(fe.pow_int(-k));
    }
    return result;
}

std::map<rat, Expr> Expr::coeffs_in(int atom) const {
    for (const auto& [f, k] : den_)
        if (f.contains(atom)) throw domain_error("coeffs_in: atom occurs in a denominator");
    std::map<rat, Expr> out;
    for (const auto& [m, c] : num_.t) {
        rat e = m.exponent(atom);
        Poly p;
        p.t.emplace(m.without(atom), c);
        Expr piece(std::move(p), den_);
        auto it = out.find(e);
        if (it == out.end())
            out.emplace(e, std::move(piece));
        else
            it->second = it->second.add(piece);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<Mono, Expr> Expr::collect(const std::function<bool(int)>& pred) const {
    for (const auto& [f, k] : den_)
        if (f.contains_if(pred)) throw domain_error("collect: selected atom occurs in a denominator");
    std::map<Mono, Expr> out;
    for (const auto& [m, c] : num_.t) {
        Mono key, rest;
        for (const auto& p : m.f)
            (pred(p.first) ? key : rest).f.push_back(p);
        Poly pp;
        pp.t.emplace(std::move(rest), c);
        Expr piece(std::move(pp), den_);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(std::move(key), std::move(piece));
        else
            it->second = it->second.add(piece);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

double Expr::eval_double(const std::map<int, double>& bind) const {
    auto eval_poly = [&](const Poly& p) {
        double s = 0;
        for (const auto& [m, c] : p.t) {
            double v = c.get_d();
            for (const auto& [a, e] : m.f) {
                auto it = bind.find(a);
                if (it == bind.end()) throw domain_error("eval_double: unbound atom " + symint::atom(a).name);
                v *= std::pow(it->second, e.get_d());
            }
            s += v;
        }
        return s;
    };
    double r = eval_poly(num_);
    for (const auto& [f, k] : den_) {
        double d = eval_poly(f);
        for (int i = 0; i < k; ++i) r /= d;
    }
    return r;
}

rat Expr::eval_rat(const std::map<int, rat>& bind) const {
    auto eval_poly = [&](const Poly& p) {
        rat s(0);
        for (const auto& [m, c] : p.t) {
            rat v = c;
            for (const auto& [a, e] : m.f) {
                auto it = bind.find(a);
                if (it == bind.end()) throw domain_error("eval_rat: unbound atom " + symint::atom(a).name);
                if (!is_integer(e)) throw domain_error("eval_rat: fractional exponent");
                v *= pow_rat(it->second, to_long(e));
            }
            s += v;
        }
        return s;
    };
    rat r = eval_poly(num_);
    for (const auto& [f, k] : den_) {
        rat d = eval_poly(f);
        if (d == 0) throw domain_error("eval_rat: denominator vanishes at sample");
        r /= pow_rat(d, k);
    }
    return r;
}

bool operator==(const Expr& a, const Expr& b) { return a.same(b); }

}  // namespace symint
