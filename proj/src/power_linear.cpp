#include "druz/power_linear.hpp"

#include <algorithm>
#include <map>

namespace druz {

PolyMap realize_map(const PowerLinearData& data) {
    int n = data.a.rows();
    if (data.a.cols() != n) throw error("power-linear matrix must be square");
    if (static_cast<int>(data.d.size()) != n) throw error("exponent vector length mismatch");
    auto forms = linear_forms(data.a);
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (data.d[static_cast<size_t>(i)] < 2) throw error("power-linear exponents must be >= 2");
        Polynomial c = Polynomial::variable(n, i);
        if (!forms[static_cast<size_t>(i)].is_zero())
            c += forms[static_cast<size_t>(i)].pow(
                static_cast<uint32_t>(data.d[static_cast<size_t>(i)]));
        comps.push_back(std::move(c));
    }
    return PolyMap(std::move(comps));
}

Theorem21Report theorem21_check(const PowerLinearData& data) {
    PolyMap f = realize_map(data);
    PolyMatrix jh = jacobian_of(f.minus_identity());
    Theorem21Report rep{};
    rep.trace_zero = jh.trace().is_zero();
    int n = data.a.rows();
    if (n >= 2) {
        rep.minors = principal_minor_scan(data.a, 2, n);
        rep.minors_vanish = std::all_of(rep.minors.begin(), rep.minors.end(),
                                        [](const MinorSizeReport& r) { return r.all_vanish; });
    } else {
        rep.minors_vanish = true;
    }
    rep.hypotheses_hold = rep.trace_zero && rep.minors_vanish;
    if (rep.hypotheses_hold) rep.inverse = formal_inverse(f);
    return rep;
}

CorollaryReport corollary_diagnostics(const PowerLinearData& data) {
    int n = data.a.rows();
    CorollaryReport rep{};
    rep.n = n;
    rep.rank_a = rank(data.a);
    rep.corank_a = n - rep.rank_a;
    rep.keller = is_keller(realize_map(data));
    rep.cor22_range_vacuous = n - 4 < 2;
    if (rep.cor22_range_vacuous) {
        rep.cor22_minors_vanish = true;
    } else {
        auto scan = principal_minor_scan(data.a, 2, n - 4);
        rep.cor22_minors_vanish = std::all_of(scan.begin(), scan.end(),
                                              [](const MinorSizeReport& r) { return r.all_vanish; });
    }
    rep.cor22_applicable = rep.keller && rep.cor22_minors_vanish;
    rep.diagonal_all_nonzero = true;
    for (int i = 0; i < n; ++i)
        if (data.a.at(i, i).is_zero()) rep.diagonal_all_nonzero = false;
    rep.rank_le_half = rep.rank_a <= n / 2;
    rep.cor23_applicable = rep.keller && rep.diagonal_all_nonzero;
    return rep;
}

namespace {

struct FormKey {
    std::vector<Rat> form;
    int exponent;
    bool operator<(const FormKey& o) const {
        if (exponent != o.exponent) return exponent < o.exponent;
        for (size_t i = 0; i < form.size(); ++i) {
            if (form[i] != o.form[i]) return form[i] < o.form[i];
        }
        return false;
    }
};

// normalizes so the first nonzero entry is 1; the absorbed scale^d goes
// into the coefficient
void push_term(std::map<FormKey, Rat>& acc, std::vector<Rat> form, Rat coeff, int d) {
    size_t lead = form.size();
    for (size_t i = 0; i < form.size(); ++i)
        if (!form[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == form.size()) throw error("zero linear form in a Waring term");
    Rat scale = form[lead];
    if (!scale.is_one()) {
        for (auto& v : form) v /= scale;
        coeff *= scale.pow(d);
    }
    acc[FormKey{std::move(form), d}] += coeff;
}

}  // namespace

std::vector<WaringTerm> waring_decompose(const Polynomial& p) {
    if (p.is_zero() || !p.is_homogeneous()) throw error("waring_decompose requires a nonzero homogeneous input");
    int64_t d64 = *p.degree();
    if (d64 < 2) throw error("waring_decompose requires degree >= 2");
    if (d64 > 12) throw error("waring_decompose capped at degree 12");
    int d = static_cast<int>(d64);
    int r = p.arity();

    std::map<FormKey, Rat> acc;
    for (const auto& [mono, coeff] : p.terms()) {
        // pure power: already a d-th power of a coordinate form
        int nonzero_vars = 0, var = -1;
        for (int j = 0; j < r; ++j)
            if (mono.exp(j) > 0) {
                ++nonzero_vars;
                var = j;
            }
        if (nonzero_vars == 1) {
            std::vector<Rat> form(static_cast<size_t>(r), Rat(0));
            form[static_cast<size_t>(var)] = Rat(1);
            push_term(acc, std::move(form), coeff, d);
            continue;
        }
        if (d == 2) {
            // x*y = ((x+y)^2 - (x-y)^2)/4
            int u = -1, v = -1;
            for (int j = 0; j < r; ++j)
                if (mono.exp(j) > 0) (u < 0 ? u : v) = j;
            std::vector<Rat> plus(static_cast<size_t>(r), Rat(0)),
                minus(static_cast<size_t>(r), Rat(0));
            plus[static_cast<size_t>(u)] = Rat(1);
            plus[static_cast<size_t>(v)] = Rat(1);
            minus[static_cast<size_t>(u)] = Rat(1);
            minus[static_cast<size_t>(v)] = Rat(-1);
            push_term(acc, std::move(plus), coeff * Rat(1, 4), 2);
            push_term(acc, std::move(minus), coeff * Rat(-1, 4), 2);
            continue;
        }
        // finite differences: e! z_1...z_e = sum over nonempty S of
        // (-1)^{e-|S|} (sum_{i in S} z_i)^e, with the z_i listed with
        // multiplicity
        std::vector<int> z;
        for (int j = 0; j < r; ++j)
            for (uint32_t k = 0; k < mono.exp(j); ++k) z.push_back(j);
        Rat dfact(1);
        for (int k = 2; k <= d; ++k) dfact *= Rat(k);
        for (uint32_t mask = 1; mask < (1u << d); ++mask) {
            std::vector<Rat> form(static_cast<size_t>(r), Rat(0));
            int bits = 0;
            for (int b = 0; b < d; ++b)
                if (mask & (1u << b)) {
                    form[static_cast<size_t>(z[static_cast<size_t>(b)])] += Rat(1);
                    ++bits;
                }
            Rat c = coeff / dfact;
            if ((d - bits) % 2 == 1) c = -c;
            push_term(acc, std::move(form), c, d);
        }
    }

    std::vector<WaringTerm> out;
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        out.push_back(WaringTerm{std::move(coeff), key.form, key.exponent});
    }
    return out;
}

Polynomial waring_expand(std::span<const WaringTerm> terms, int arity) {
    Polynomial acc(arity);
    for (const auto& t : terms) {
        Polynomial form(arity);
        for (int j = 0; j < arity; ++j)
            if (!t.form[static_cast<size_t>(j)].is_zero())
                form += t.form[static_cast<size_t>(j)] * Polynomial::variable(arity, j);
        acc += t.coeff * form.pow(static_cast<uint32_t>(t.exponent));
    }
    return acc;
}

}  // namespace druz
