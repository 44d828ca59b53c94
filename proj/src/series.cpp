#include "symint/series.hpp"

namespace symint {

int chi_atom() { return symtab::instance().indep("chi"); }

Series Series::term(int var, const rat& e, Expr coeff) {
    Series s{var, {}, std::nullopt};
    if (!coeff.is_zero()) s.c.emplace(e, std::move(coeff));
    return s;
}

std::optional<rat> Series::min_exponent() const {
    if (c.empty()) return std::nullopt;
    return c.begin()->first;
}

void Series::set_term(const rat& e, Expr coeff) {
    if (coeff.is_zero())
        c.erase(e);
    else
        c[e] = std::move(coeff);
}

Expr Series::coefficient(const rat& e) const {
    if (valid_to && e > *valid_to)
        throw domain_error("requested series order unreachable with stored truncation");
    auto it = c.find(e);
    return it == c.end() ? Expr::zero() : it->second;
}

void Series::truncate(const rat& cut) {
    c.erase(c.upper_bound(cut), c.end());
    if (!valid_to || cut < *valid_to) valid_to = cut;
}

Series Series::add(const Series& o) const {
    Series r = *this;
    if (o.valid_to && (!r.valid_to || *o.valid_to < *r.valid_to)) r.valid_to = o.valid_to;
    for (const auto& [e, k] : o.c) {
        auto it = r.c.find(e);
        if (it == r.c.end()) {
            r.c.emplace(e, k);
        } else {
            it->second = it->second.add(k);
            if (it->second.is_zero()) r.c.erase(it);
        }
    }
    if (r.valid_to) r.c.erase(r.c.upper_bound(*r.valid_to), r.c.end());
    return r;
}

Series Series::sub(const Series& o) const { return add(o.scale(Expr::constant(rat(-1)))); }

Series Series::scale(const Expr& k) const {
    Series r{var, {}, valid_to};
    if (k.is_zero()) return r;
    for (const auto& [e, v] : c) {
        Expr p = v.mul(k);
        if (!p.is_zero()) r.c.emplace(e, std::move(p));
    }
    return r;
}

namespace {

// Lower bound for the exponent of any term (known or hidden) of s.
std::optional<rat> floor_exponent(const Series& s) {
    auto m = s.min_exponent();
    if (m) {
        if (s.valid_to && *s.valid_to < *m) return s.valid_to;
        return m;
    }
    return s.valid_to;  // truncated zero: hidden terms sit above valid_to
}

}  // namespace

Series Series::mul(const Series& o, const rat& cut) const {
    Series r{var, {}, std::nullopt};
    // exactness bound of the product
    std::optional<rat> va = valid_to, vb = o.valid_to;
    std::optional<rat> fa = floor_exponent(*this), fb = floor_exponent(o);
    std::optional<rat> v;
    if (va) {
        if (fb)
            v = *va + *fb;
        else
            v = std::nullopt;  // o identically zero: product exact
    }
    if (vb && fa) {
        rat w = *vb + *fa;
        if (!v || w < *v) v = w;
    }
    if (!v || cut < *v) v = cut;
    r.valid_to = v;
    for (const auto& [e1, c1] : c) {
        for (const auto& [e2, c2] : o.c) {
            rat e = e1 + e2;
            if (e > *r.valid_to) continue;
            Expr p = c1.mul(c2);
            if (p.is_zero()) continue;
            auto it = r.c.find(e);
            if (it == r.c.end()) {
                r.c.emplace(e, std::move(p));
            } else {
                it->second = it->second.add(p);
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
    }
    return r;
}

Series Series::ipow(long n, const rat& cut) const {
    if (n < 0) throw domain_error("series ipow: negative power");
    Series r = Series::term(var, rat(0), Expr::constant(rat(1)));
    Series base = *this;
    while (n > 0) {
        if (n & 1) r = r.mul(base, cut);
        n >>= 1;
        if (n) base = base.mul(base, cut);
    }
    return r;
}

Series series_derive(const Series& s, int y, const Expr& dvar, const deriv_ctx& ctx) {
    Series r{s.var, {}, std::nullopt};
    if (s.valid_to) r.valid_to = *s.valid_to - 1;
    for (const auto& [e, coeff] : s.c) {
        Expr dc = total_derivative(coeff, y, ctx);
        if (!dc.is_zero() && (!r.valid_to || e <= *r.valid_to)) {
            auto it = r.c.find(e);
            if (it == r.c.end())
                r.c.emplace(e, dc);
            else {
                it->second = it->second.add(dc);
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
        if (e != 0 && !dvar.is_zero()) {
            rat e1 = e - 1;
            if (r.valid_to && e1 > *r.valid_to) continue;
            Expr term = coeff.scale(e).mul(dvar);
            if (term.is_zero()) continue;
            auto it = r.c.find(e1);
            if (it == r.c.end())
                r.c.emplace(e1, std::move(term));
            else {
                it->second = it->second.add(term);
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
    }
    return r;
}

Series series_substitute(const Expr& e, int func0, const Series& s, const rat& order,
                         const std::map<int, Expr>& grade_rule, const deriv_ctx& ctx) {
    const atom_info& f = atom(func0);
    auto dep_pred = [&](int a) { return is_jet_of(a, func0); };
    for (const auto& [fac, k] : e.den())
        if (fac.contains_if(dep_pred))
            throw domain_error("series_substitute: expression has the target in a denominator");

    // memoized jet series: multi-index -> derivative of s
    std::map<std::vector<int>, Series> memo;
    memo.emplace(std::vector<int>(f.args.size(), 0), s);
    std::function<const Series&(const std::vector<int>&)> jet_series =
        [&](const std::vector<int>& mi) -> const Series& {
        auto it = memo.find(mi);
        if (it != memo.end()) return it->second;
        std::vector<int> lower = mi;
        size_t slot = 0;
        for (size_t i = 0; i < mi.size(); ++i)
            if (mi[i] > 0) slot = i;
        lower[slot] -= 1;
        int y = f.args[slot];
        auto gr = grade_rule.find(y);
        if (gr == grade_rule.end())
            throw domain_error("series_substitute: no grade rule for argument " + atom(y).name);
        Series d = series_derive(jet_series(lower), y, gr->second, ctx);
        return memo.emplace(mi, std::move(d)).first->second;
    };

    Series out = Series::zero(s.var);
    out.valid_to = std::nullopt;
    bool first = true;
    for (const auto& [m, coeff] : e.num().t) {
        Series term = Series::term(s.var, rat(0), Expr::constant(coeff));
        Poly rest;  // non-target factors stay in the coefficient
        Mono restm;
        for (const auto& [a, ex] : m.f) {
            if (!dep_pred(a)) {
                restm.f.emplace_back(a, ex);
                continue;
            }
            if (!is_integer(ex) || ex < 0)
                throw domain_error("series_substitute: expression not polynomial in the target jets");
            term = term.mul(jet_series(atom(a).mindex).ipow(to_long(ex), order), order);
        }
        if (!restm.f.empty()) {
            rest.t.emplace(restm, rat(1));
            term = term.scale(Expr(rest, e.den()));
        } else if (!e.den().empty()) {
            term = term.scale(Expr(Poly::constant(rat(1)), e.den()));
        }
        if (first) {
            out = term;
            first = false;
        } else {
            out = out.add(term);
        }
    }
    if (out.valid_to && *out.valid_to < order)
        throw domain_error("requested series order unreachable with stored truncation");
    out.truncate(order);
    return out;
}

Series PuiseuxSeries::to_series() const {
    Series s = Series::zero(var);
    for (const auto& [k, c] : coeff) s.set_term(p + step * k, c);
    s.valid_to = p + step * trunc_n;
    return s;
}

}  // namespace symint
