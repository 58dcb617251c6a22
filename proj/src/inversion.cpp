#include "druz/inversion.hpp"

#include <algorithm>

namespace druz {

namespace {

int64_t ipow_checked(int64_t base, int64_t e) {
    int64_t r = 1;
    for (int64_t i = 0; i < e; ++i) {
        if (base != 0 && r > (int64_t{1} << 40) / std::max<int64_t>(base, 1))
            throw error("degree bound overflow; pass an explicit --bound");
        r *= base;
    }
    return r;
}

void require_no_affine_part(const std::vector<Polynomial>& h) {
    for (const auto& hi : h)
        for (const auto& [m, c] : hi.terms())
            if (m.degree() < 2)
                throw error("F must equal X + H with H free of constant and linear terms");
}

}  // namespace

InverseResult formal_inverse(const PolyMap& f, std::optional<int64_t> bound_opt) {
    int n = f.dim();
    auto h = f.minus_identity();
    require_no_affine_part(h);
    int64_t d = map_degree(f).value_or(1);
    int64_t bound = bound_opt ? *bound_opt : ipow_checked(d, n > 0 ? n - 1 : 0);
    if (bound < 1) throw error("inversion bound must be >= 1");

    PolyMap x = PolyMap::identity(n);
    bool h_zero = std::all_of(h.begin(), h.end(),
                              [](const Polynomial& p) { return p.is_zero(); });

    std::vector<Polynomial> g = x.components();
    bool exact = h_zero;
    if (!exact) {
        for (int64_t m = 2; m <= bound; ++m) {
            // untruncated step, reused for the exact fixpoint test
            auto hg = substitute_all(h, g);
            std::vector<Polynomial> p;
            p.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                p.push_back(x.comp(i) - hg[static_cast<size_t>(i)]);
            if (p == g) {
                exact = true;
                break;
            }
            for (auto& pi : p) pi = pi.truncated(m);
            g = std::move(p);
        }
        if (!exact) {
            auto hg = substitute_all(h, g);
            exact = true;
            for (int i = 0; i < n; ++i)
                if (x.comp(i) - hg[static_cast<size_t>(i)] != g[static_cast<size_t>(i)]) {
                    exact = false;
                    break;
                }
        }
    }

    InverseResult res{InverseVerdict::not_invertible_within_bound, std::nullopt, std::nullopt,
                      bound, false};
    if (!exact) return res;

    PolyMap G(std::move(g));
    bool both = compose(f, G) == x && compose(G, f) == x;
    res.certified = both;
    if (both) {
        res.verdict = InverseVerdict::inverse;
        res.degree = map_degree(G).value_or(0);
        res.inverse = std::move(G);
    }
    return res;
}

PolyMap inverse_via_pairing(const GZPair& pair, const PolyMap& f_inv) {
    if (pair.status == PairStatus::invalid) throw error("pair is not at least weak");
    int r = pair.f.dim(), n = pair.F.dim();
    PolyMap idr = PolyMap::identity(r);
    if (compose(pair.f, f_inv) != idr || compose(f_inv, pair.f) != idr)
        throw error("f_inv is not an inverse of f");

    // F^{-1} = X - H(C f^{-1}(B X))
    auto bx = linear_forms(pair.B);  // r forms in n variables
    auto finv_bx = substitute_all(f_inv.components(), bx);
    std::vector<Polynomial> z;
    z.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial zi(n);
        for (int j = 0; j < r; ++j)
            if (!pair.C.at(i, j).is_zero())
                zi += pair.C.at(i, j) * finv_bx[static_cast<size_t>(j)];
        z.push_back(std::move(zi));
    }
    auto h = pair.F.minus_identity();
    auto hz = substitute_all(h, z);
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        g.push_back(Polynomial::variable(n, i) - hz[static_cast<size_t>(i)]);
    PolyMap G(std::move(g));
    if (compose(pair.F, G) != PolyMap::identity(n))
        throw error("pairing inverse failed the composition check");
    return G;
}

InverseResult nilpotent_inverse_formula(const PolyMap& f) {
    int n = f.dim();
    auto h = f.minus_identity();
    std::optional<int64_t> common;
    for (const auto& hi : h) {
        if (hi.is_zero()) continue;
        if (!hi.is_homogeneous())
            throw hypothesis_error("H is not homogeneous");
        int64_t d = *hi.degree();
        if (common && *common != d)
            throw hypothesis_error("H components have mixed degrees");
        common = d;
    }
    if (common && *common < 2)
        throw hypothesis_error("H must have degree >= 2");
    PolyMatrix jh = jacobian_of(h);
    PolyMatrix jh2 = jh * jh;
    if (!(jh2 * jh).is_zero()) throw hypothesis_error("JH^3 != 0");
    int kdim = static_cast<int>(constant_kernel(jh).size());
    if (generic_rank(jh) != n - kdim)
        throw hypothesis_error(
            "kernel dimension hypothesis fails: generic rank JH != n - dim(ker JH en K^n)");

    std::vector<Polynomial> xmh;
    xmh.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        xmh.push_back(Polynomial::variable(n, i) - h[static_cast<size_t>(i)]);
    auto hxmh = substitute_all(h, xmh);
    std::vector<Polynomial> g;
    g.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        g.push_back(Polynomial::variable(n, i) - hxmh[static_cast<size_t>(i)]);
    PolyMap G(std::move(g));

    PolyMap x = PolyMap::identity(n);
    bool both = compose(f, G) == x && compose(G, f) == x;
    int64_t d = map_degree(f).value_or(1);
    InverseResult res{InverseVerdict::not_invertible_within_bound, std::nullopt, std::nullopt,
                      d * d, both};
    if (both) {
        res.verdict = InverseVerdict::inverse;
        res.degree = map_degree(G).value_or(0);
        res.inverse = std::move(G);
    }
    return res;
}

PolyMap rank_one_realize(const RankOneNormalForm& nf) {
    int n = nf.n, s = nf.s;
    if (s < 0 || s > n - 1) throw error("normal form requires 0 <= s <= n-1");
    if (static_cast<int>(nf.c.size()) != s) throw error("normal form constant count mismatch");
    if (nf.lambda == Rat(-1)) throw error("normal form requires lambda != -1");
    if (nf.g.arity() != n) throw error("normal form g arity mismatch");
    for (const auto& [m, c] : nf.g.terms())
        for (int j = s; j < n; ++j)
            if (m.exp(j) > 0) throw error("g may only use the first s variables");
    if (static_cast<int>(nf.tails.size()) != std::max(0, n - s - 2))
        throw error("normal form tail count mismatch");
    for (const auto& t : nf.tails)
        if (t.arity() != 1) throw error("tails must be univariate");

    Polynomial pivot = nf.lambda * Polynomial::variable(n, s) + nf.g;
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < s; ++i)
        comps.push_back(Polynomial::variable(n, i) +
                        Polynomial::constant(n, nf.c[static_cast<size_t>(i)]));
    comps.push_back(Polynomial::variable(n, s) + pivot);
    for (int i = s + 1; i < n; ++i) {
        std::vector<Polynomial> arg{pivot};
        comps.push_back(Polynomial::variable(n, i) +
                        nf.tails[static_cast<size_t>(i - s - 1)].substitute(arg));
    }
    return PolyMap(std::move(comps));
}

PolyMap rank_one_inverse(const RankOneNormalForm& nf) {
    int n = nf.n, s = nf.s;
    PolyMap F = rank_one_realize(nf);

    // g~ = g(x_1 - c_1, ..., x_s - c_s)
    std::vector<Polynomial> shifted;
    shifted.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        Polynomial gj = Polynomial::variable(n, j);
        if (j < s) gj -= Polynomial::constant(n, nf.c[static_cast<size_t>(j)]);
        shifted.push_back(std::move(gj));
    }
    Polynomial gt = nf.g.substitute(shifted);
    Rat scale = (Rat(1) + nf.lambda).inv();
    Polynomial q = scale * (nf.lambda * Polynomial::variable(n, s) + gt);

    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < s; ++i)
        comps.push_back(Polynomial::variable(n, i) -
                        Polynomial::constant(n, nf.c[static_cast<size_t>(i)]));
    comps.push_back(Polynomial::variable(n, s) - q);
    for (int i = s + 1; i < n; ++i) {
        std::vector<Polynomial> arg{q};
        comps.push_back(Polynomial::variable(n, i) -
                        nf.tails[static_cast<size_t>(i - s - 1)].substitute(arg));
    }
    PolyMap G(std::move(comps));

    // certification: F o G = X, G o F = X, and q|_{X=F} recovers the pivot
    PolyMap x = PolyMap::identity(n);
    if (compose(F, G) != x || compose(G, F) != x)
        throw error("rank-one inverse failed the composition check");
    Polynomial pivot = nf.lambda * Polynomial::variable(n, s) + nf.g;
    if (q.substitute(F.components()) != pivot)
        throw error("rank-one inverse failed the pivot substitution identity");
    return G;
}

DMatrix build_D(const Rat& lambda, const std::vector<int>& degrees) {
    if (lambda == Rat(1)) throw error("build_D requires lambda != 1");
    int n = static_cast<int>(degrees.size());
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        int d = degrees[static_cast<size_t>(i)];
        if (d < 1) throw error("build_D requires degrees >= 1");
        Rat geo(0), p(1);
        for (int k = 0; k < d; ++k) {
            geo += p;
            p *= lambda;
        }
        m.at(i, i) = geo / Rat(d);
    }
    return DMatrix{lambda, degrees, std::move(m)};
}

PolyMatrix build_D_symbolic(const std::vector<int>& degrees) {
    int n = static_cast<int>(degrees.size());
    PolyMatrix m(n, n, 1);
    Polynomial lam = Polynomial::variable(1, 0);
    for (int i = 0; i < n; ++i) {
        int d = degrees[static_cast<size_t>(i)];
        if (d < 1) throw error("build_D requires degrees >= 1");
        Polynomial geo(1);
        for (int k = 0; k < d; ++k) geo += lam.pow(static_cast<uint32_t>(k));
        geo *= Rat(1, d);
        m.at(i, i) = std::move(geo);
    }
    return m;
}

LineCheckResult line_injectivity_check(const PolyMap& f, const HomogeneousProfile& prof,
                                       std::span<const Rat> a, const Rat& lambda) {
    int n = f.dim();
    if (static_cast<int>(a.size()) != n) throw error("point dimension mismatch");
    if (lambda == Rat(1)) throw error("line check requires lambda != 1");
    auto h = f.minus_identity();
    // profile validation mirrors euler_form_check
    if (static_cast<int>(prof.degrees.size()) != n) throw error("profile dimension mismatch");
    for (int i = 0; i < n; ++i) {
        const auto& hi = h[static_cast<size_t>(i)];
        if (hi.is_zero()) continue;
        if (!hi.is_homogeneous() ||
            *hi.degree() != static_cast<int64_t>(prof.degrees[static_cast<size_t>(i)]))
            throw error("profile mismatch with the actual degree of component " +
                        std::to_string(i + 1));
    }

    std::vector<Rat> la;
    la.reserve(a.size());
    for (const auto& v : a) la.push_back(lambda * v);
    bool maps_equal = f.evaluate(a) == f.evaluate(la);

    RatMatrix jh_a = jacobian_of(h).evaluate(a);
    RatMatrix m = build_D(lambda, prof.degrees).mat * jh_a + RatMatrix::identity(n);
    auto img = m.apply(a);
    bool kernel_condition = std::all_of(img.begin(), img.end(),
                                        [](const Rat& v) { return v.is_zero(); });
    return LineCheckResult{maps_equal, kernel_condition};
}

bool det_identity_check(const PolyMap& f, const HomogeneousProfile& prof) {
    int n = f.dim();
    auto h = f.minus_identity();
    if (static_cast<int>(prof.degrees.size()) != n) throw error("profile dimension mismatch");
    for (int i = 0; i < n; ++i) {
        const auto& hi = h[static_cast<size_t>(i)];
        if (hi.is_zero()) continue;
        if (!hi.is_homogeneous() ||
            *hi.degree() != static_cast<int64_t>(prof.degrees[static_cast<size_t>(i)]))
            throw error("profile mismatch with the actual degree of component " +
                        std::to_string(i + 1));
    }
    // adjoin lambda as variable n
    PolyMatrix jh = jacobian_of(h).lift_arity(n + 1);
    Polynomial lam = Polynomial::variable(n + 1, n);
    PolyMatrix m = PolyMatrix::identity(n, n + 1);
    for (int i = 0; i < n; ++i) {
        int d = prof.degrees[static_cast<size_t>(i)];
        Polynomial geo(n + 1);
        for (int k = 0; k < d; ++k) geo += lam.pow(static_cast<uint32_t>(k));
        geo *= Rat(1, d);
        for (int j = 0; j < n; ++j) {
            if (jh.at(i, j).is_zero()) continue;
            m.at(i, j) += geo * jh.at(i, j);
        }
    }
    return determinant(m) == Polynomial::constant(n + 1, Rat(1));
}

DegreeBoundReport degree_bound_report(const PolyMap& f, const InverseResult& result,
                                      const GZPair* pair, const PolyMap* f_inv) {
    if (result.verdict != InverseVerdict::inverse || !result.inverse)
        throw error("degree_bound_report requires a certified inverse");
    DegreeBoundReport rep{};
    rep.n = f.dim();
    rep.deg_f = map_degree(f).value_or(0);
    rep.deg_inverse = *result.degree;
    rep.bcw_bound = ipow_checked(rep.deg_f, rep.n > 0 ? rep.n - 1 : 0);
    rep.bcw_holds = rep.deg_inverse <= rep.bcw_bound;
    auto idx = nilpotency_index(jacobian_of(f.minus_identity()));
    if (idx) {
        rep.jh_nilpotency_index = *idx;
        if (*idx <= 3) rep.cor42_holds = rep.deg_inverse <= rep.deg_f * rep.deg_f;
        int k = std::max(0, *idx - 1);  // JH^{k+1} = 0
        rep.power_index_bound = ipow_checked(rep.deg_f, k);
        rep.power_index_bound_holds = rep.deg_inverse <= *rep.power_index_bound;
    }
    if (pair && f_inv) {
        int64_t deg_finv = map_degree(*f_inv).value_or(0);
        int64_t d = map_degree(pair->F).value_or(1);
        rep.pairing_upper = d * deg_finv;
        rep.pairing_sandwich_holds =
            deg_finv <= rep.deg_inverse && rep.deg_inverse <= *rep.pairing_upper;
    }
    return rep;
}

}  // namespace druz
