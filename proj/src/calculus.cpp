#include "symint/calculus.hpp"

#include <algorithm>

namespace symint {

namespace {

// Derivative of a single atom under the total derivative D_y.
Expr atom_total_derivative(int a, int y, const deriv_ctx& ctx) {
    auto fn = ctx.atom_fn.find(a);
    if (fn != ctx.atom_fn.end()) return total_derivative(fn->second, y, ctx);
    const atom_info& ai = atom(a);
    switch (ai.kind) {
        case atom_kind::indep:
            return a == y ? Expr::constant(rat(1)) : Expr::zero();
        case atom_kind::param:
            return Expr::zero();
        case atom_kind::special: {
            auto it = ctx.special.find(a);
            if (it == ctx.special.end())
                throw domain_error("no derivative rule for special atom " + ai.name);
            auto jt = it->second.find(y);
            return jt == it->second.end() ? Expr::zero() : jt->second;
        }
        case atom_kind::jet: {
            Expr r;
            for (size_t i = 0; i < ai.args.size(); ++i) {
                Expr chain = atom_total_derivative(ai.args[i], y, ctx);
                if (chain.is_zero()) continue;
                int raised = symtab::instance().jet_raise(a, static_cast<int>(i));
                r = r.add(chain.mul(Expr::atom(raised)));
            }
            return r;
        }
    }
    throw domain_error("unreachable atom kind");
}

// Shared derivation driver: rule(atom) gives the derivative of each leaf.
Expr derive_with(const Expr& e, const std::function<Expr(int)>& rule) {
    Expr result;
    // numerator part
    for (const auto& [m, c] : e.num().t) {
        for (size_t i = 0; i < m.f.size(); ++i) {
            Expr d = rule(m.f[i].first);
            if (d.is_zero()) continue;
            Poly rest;
            Mono mm = m;
            mm.f[i].second -= 1;
            if (mm.f[i].second == 0) mm.f.erase(mm.f.begin() + i);
            rest.t.emplace(std::move(mm), c * m.f[i].second);
            result = result.add(Expr(std::move(rest), e.den()).mul(d));
        }
    }
    // quotient rule over the factored denominator
    for (const auto& [f, k] : e.den()) {
        Expr df;
        for (const auto& [m, c] : f.t) {
            for (size_t i = 0; i < m.f.size(); ++i) {
                Expr d = rule(m.f[i].first);
                if (d.is_zero()) continue;
                Poly rest;
                Mono mm = m;
                mm.f[i].second -= 1;
                if (mm.f[i].second == 0) mm.f.erase(mm.f.begin() + i);
                rest.t.emplace(std::move(mm), c * m.f[i].second);
                df = df.add(Expr(std::move(rest)).mul(d));
            }
        }
        if (df.is_zero()) continue;
        std::map<Poly, int> dd = e.den();
        dd[f] += 1;
        result = result.add(Expr(e.num().scale(rat(-k)), std::move(dd)).mul(df));
    }
    return result;
}

}  // namespace

Expr total_derivative(const Expr& e, int y, const deriv_ctx& ctx) {
    return derive_with(e, [&](int a) { return atom_total_derivative(a, y, ctx); });
}

Expr total_derivative_multi(const Expr& e, const std::vector<int>& dirs,
                            const std::vector<int>& mindex, const deriv_ctx& ctx) {
    Expr r = e;
    for (size_t i = 0; i < dirs.size(); ++i)
        for (int k = 0; k < mindex[i]; ++k) r = total_derivative(r, dirs[i], ctx);
    return r;
}

Expr partial_derivative(const Expr& e, int a) {
    return derive_with(e, [&](int b) {
        return b == a ? Expr::constant(rat(1)) : Expr::zero();
    });
}

Expr substitute_function(const Expr& e, int func0, const Expr& replacement,
                         const deriv_ctx& ctx) {
    const atom_info& f = atom(func0);
    // gather all jets of func0 occurring anywhere in e
    std::vector<int> found;
    auto scan = [&](const Poly& p) {
        for (const auto& [m, c] : p.t)
            for (const auto& [a, ex] : m.f)
                if (is_jet_of(a, func0)) found.push_back(a);
    };
    scan(e.num());
    for (const auto& [fac, k] : e.den()) scan(fac);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) return e;

    // derivatives of the replacement, memoized by multi-index
    std::map<std::vector<int>, Expr> memo;
    memo.emplace(std::vector<int>(f.args.size(), 0), replacement);
    std::function<const Expr&(const std::vector<int>&)> deriv =
        [&](const std::vector<int>& mi) -> const Expr& {
        auto it = memo.find(mi);
        if (it != memo.end()) return it->second;
        // lower the last positive slot
        std::vector<int> lower = mi;
        size_t slot = 0;
        for (size_t i = 0; i < mi.size(); ++i)
            if (mi[i] > 0) slot = i;
        lower[slot] -= 1;
        Expr d = total_derivative(deriv(lower), f.args[slot], ctx);
        return memo.emplace(mi, std::move(d)).first->second;
    };

    std::map<int, Expr> sub;
    for (int a : found) sub.emplace(a, deriv(atom(a).mindex));
    return e.subst_atoms(sub);
}

Expr rename_function(const Expr& e, int from0, int to0) {
    const atom_info& from = atom(from0);
    const atom_info& to = atom(to0);
    if (from.args.size() != to.args.size())
        throw domain_error("rename_function: argument count mismatch");
    std::map<int, Expr> sub;
    auto scan = [&](const Poly& p) {
        for (const auto& [m, c] : p.t)
            for (const auto& [a, ex] : m.f)
                if (is_jet_of(a, from0))
                    sub.emplace(a, Expr::atom(symtab::instance().jet(to0, atom(a).mindex)));
    };
    scan(e.num());
    for (const auto& [fac, k] : e.den()) scan(fac);
    return e.subst_atoms(sub);
}

int top_jet(const Expr& e, int func0) {
    int best = -1;
    auto better = [&](int a) {
        if (best < 0) return true;
        const atom_info& x = atom(a);
        const atom_info& b = atom(best);
        if (x.order != b.order) return x.order > b.order;
        // ties: more derivatives in later arguments
        for (size_t i = x.mindex.size(); i-- > 0;) {
            if (x.mindex[i] != b.mindex[i]) return x.mindex[i] > b.mindex[i];
        }
        return false;
    };
    auto scan = [&](const Poly& p) {
        for (const auto& [m, c] : p.t)
            for (const auto& [a, ex] : m.f)
                if (is_jet_of(a, func0) && better(a)) best = a;
    };
    scan(e.num());
    for (const auto& [fac, k] : e.den()) scan(fac);
    return best;
}

int max_jet_order(const Expr& e, int func0) {
    int t = top_jet(e, func0);
    return t < 0 ? -1 : atom(t).order;
}

Expr solve_linear(const Expr& H, int jet_atom) {
    rat deg = H.degree_in(jet_atom);
    if (deg != 1) throw domain_error("equation is not linear in its highest derivative");
    auto parts = H.coeffs_in(jet_atom);
    Expr A = parts.count(rat(1)) ? parts.at(rat(1)) : Expr::zero();
    Expr B = parts.count(rat(0)) ? parts.at(rat(0)) : Expr::zero();
    if (A.is_zero()) throw domain_error("highest-derivative coefficient vanishes identically");
    return B.neg().div(A);
}

Expr euler_operator(const Expr& e, int func0) {
    const atom_info& f = atom(func0);
    if (f.args.size() != 1)
        throw domain_error("euler_operator supports a single independent variable");
    int s = f.args[0];
    int n = std::max(0, max_jet_order(e, func0));
    Expr acc;
    for (int k = 0; k <= n; ++k) {
        int jk = symtab::instance().jet(func0, {k});
        Expr p = partial_derivative(e, jk);
        if (p.is_zero()) continue;
        for (int i = 0; i < k; ++i) p = total_derivative(p, s);
        acc = (k % 2 == 0) ? acc.add(p) : acc.sub(p);
    }
    return acc;
}

namespace {

// Integrate a polynomial expression in the atom `a` (no negative powers of a).
std::optional<Expr> integrate_in_atom(const Expr& e, int a) {
    for (const auto& [f, k] : e.den())
        if (f.contains(a)) return std::nullopt;
    Expr out;
    for (const auto& [deg, coeff] : e.coeffs_in(a)) {
        if (!is_integer(deg) || deg < 0) return std::nullopt;
        rat nd = deg + 1;
        out = out.add(coeff.mul(Expr::atom(a, nd)).scale(rat(1) / nd));
    }
    return out;
}

}  // namespace

std::optional<Expr> antiderivative_total(const Expr& e, int func0) {
    const atom_info& f = atom(func0);
    if (f.args.size() != 1)
        throw domain_error("antiderivative_total supports a single independent variable");
    int s = f.args[0];
    auto& tab = symtab::instance();

    Expr rem = e;
    Expr acc;
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 64) return std::nullopt;
        int k = max_jet_order(rem, func0);
        if (k >= 1) {
            int topa = tab.jet(func0, {k});
            if (rem.degree_in(topa) != 1) return std::nullopt;  // not a total derivative
            Expr A = partial_derivative(rem, topa);
            if (A.contains(topa)) return std::nullopt;
            int prev = tab.jet(func0, {k - 1});
            auto G = integrate_in_atom(A, prev);
            if (!G) return std::nullopt;
            acc = acc.add(*G);
            rem = rem.sub(total_derivative(*G, s));
            if (max_jet_order(rem, func0) >= k) return std::nullopt;
        } else {
            // only the bare function, explicit s, and parameters remain
            int f0 = tab.jet(func0, {0});
            if (rem.contains(f0)) return std::nullopt;
            auto G = integrate_in_atom(rem, s);
            if (!G) return std::nullopt;
            acc = acc.add(*G);
            rem = rem.sub(total_derivative(*G, s));
            if (!rem.is_zero()) return std::nullopt;
        }
    }
    // back-substitution check
    if (!total_derivative(acc, s).same(e)) return std::nullopt;
    return acc;
}

}  // namespace symint
