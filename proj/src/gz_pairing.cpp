#include "druz/gz_pairing.hpp"

#include "druz/power_linear.hpp"

#include <algorithm>

namespace druz {

std::string to_string(PairStatus s) {
    switch (s) {
        case PairStatus::strong: return "strong";
        case PairStatus::weak: return "weak";
        case PairStatus::invalid: return "invalid";
    }
    return "invalid";
}

PairingVerdict verify_pairing(const PolyMap& f, const PolyMap& F, const RatMatrix& B,
                              const RatMatrix& C) {
    int r = f.dim(), n = F.dim();
    if (!(r < n)) throw error("pairing requires dim f < dim F");
    if (B.rows() != r || B.cols() != n || C.rows() != n || C.cols() != r)
        throw error("pairing matrix dimension mismatch");

    // condition 1: f(y) = B F(C y)
    auto cy = linear_forms(C);  // n polynomials in r variables
    auto fcy = substitute_all(F.components(), cy);
    for (int i = 0; i < r; ++i) {
        Polynomial lhs(r);
        for (int j = 0; j < n; ++j)
            if (!B.at(i, j).is_zero()) lhs += B.at(i, j) * fcy[static_cast<size_t>(j)];
        if (lhs != f.comp(i))
            return {PairStatus::invalid, "condition 1: f(y) = B F(C y) fails"};
    }

    // condition 2: BC = I_r
    if (B * C != RatMatrix::identity(r))
        return {PairStatus::invalid, "condition 2: BC = I_r fails"};

    // condition 3: ker B within (weak) or equal to (strong) ker JH
    PolyMatrix jh = jacobian_of(F.minus_identity());
    auto kerB = kernel_basis(B);
    for (const auto& b : kerB) {
        auto img = jh.apply(b);
        for (const auto& p : img)
            if (!p.is_zero())
                return {PairStatus::invalid, "condition 3: ker B is not inside ker JH"};
    }
    size_t kdim = constant_kernel(jh).size();
    if (kerB.size() == kdim) return {PairStatus::strong, ""};
    return {PairStatus::weak, ""};
}

namespace {

struct LiftColumn {
    std::vector<Rat> mu;  // linear form on K^r
    int exponent;
    std::vector<Rat> coeff;  // column of the coefficient matrix, length r
};

RatMatrix columns_to_matrix(const std::vector<LiftColumn>& cols, int r) {
    RatMatrix b(r, static_cast<int>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k)
        for (int i = 0; i < r; ++i) b.at(i, static_cast<int>(k)) = cols[k].coeff[static_cast<size_t>(i)];
    return b;
}

RatMatrix mus_to_matrix(const std::vector<LiftColumn>& cols, int r) {
    RatMatrix m(static_cast<int>(cols.size()), r);
    for (size_t k = 0; k < cols.size(); ++k)
        for (int i = 0; i < r; ++i) m.at(static_cast<int>(k), i) = cols[k].mu[static_cast<size_t>(i)];
    return m;
}

// smallest unit vector index missing from the column space, or -1
int missing_unit(const RatMatrix& m, int dim_needed) {
    int base = rank(m);
    if (base >= dim_needed) return -1;
    for (int i = 0; i < dim_needed; ++i) {
        RatMatrix ext(m.rows(), m.cols() + 1);
        for (int a = 0; a < m.rows(); ++a)
            for (int b = 0; b < m.cols(); ++b) ext.at(a, b) = m.at(a, b);
        ext.at(i, m.cols()) = Rat(1);
        if (rank(ext) > base) return i;
    }
    return -1;
}

}  // namespace

GZPair gz_lift(const PolyMap& f) {
    int r = f.dim();
    if (r == 0) throw error("cannot lift a zero-dimensional map");
    auto h = f.minus_identity();
    bool all_zero = true;
    for (const auto& hi : h) {
        if (!hi.is_zero()) all_zero = false;
        for (const auto& [m, c] : hi.terms())
            if (m.degree() < 2)
                throw error("gz_lift requires h = f - x without constant or linear terms");
    }
    if (all_zero) throw error("nothing to lift: f is the identity");

    std::vector<LiftColumn> cols;
    int min_exponent = 0;
    for (int i = 0; i < r; ++i) {
        for (const auto& [deg, part] : h[static_cast<size_t>(i)].homogeneous_parts()) {
            auto terms = waring_decompose(part);
            for (const auto& t : terms) {
                if (min_exponent == 0 || t.exponent < min_exponent) min_exponent = t.exponent;
                // merge into an existing column with the same (form, exponent)
                auto it = std::find_if(cols.begin(), cols.end(), [&](const LiftColumn& c) {
                    return c.exponent == t.exponent && c.mu == t.form;
                });
                if (it == cols.end()) {
                    LiftColumn c{t.form, t.exponent,
                                 std::vector<Rat>(static_cast<size_t>(r), Rat(0))};
                    c.coeff[static_cast<size_t>(i)] = t.coeff;
                    cols.push_back(std::move(c));
                } else {
                    it->coeff[static_cast<size_t>(i)] += t.coeff;
                }
            }
        }
    }
    cols.erase(std::remove_if(cols.begin(), cols.end(),
                              [](const LiftColumn& c) {
                                  return std::all_of(c.coeff.begin(), c.coeff.end(),
                                                     [](const Rat& v) { return v.is_zero(); });
                              }),
               cols.end());

    // augment with cancelling +/- pairs until rank(B) = r, the forms span
    // the dual space, and n > r
    while (true) {
        RatMatrix b = columns_to_matrix(cols, r);
        RatMatrix mus = mus_to_matrix(cols, r);
        int coeff_missing = missing_unit(b, r);
        int span_missing = missing_unit(mus.transpose(), r);
        int m = static_cast<int>(cols.size());
        if (coeff_missing < 0 && span_missing < 0 && m > r) break;
        int u = coeff_missing >= 0 ? coeff_missing : 0;
        int j = span_missing >= 0 ? span_missing : 0;
        std::vector<Rat> mu(static_cast<size_t>(r), Rat(0));
        mu[static_cast<size_t>(j)] = Rat(1);
        LiftColumn plus{mu, min_exponent, std::vector<Rat>(static_cast<size_t>(r), Rat(0))};
        plus.coeff[static_cast<size_t>(u)] = Rat(1);
        LiftColumn minus{std::move(mu), min_exponent,
                         std::vector<Rat>(static_cast<size_t>(r), Rat(0))};
        minus.coeff[static_cast<size_t>(u)] = Rat(-1);
        cols.push_back(std::move(plus));
        cols.push_back(std::move(minus));
    }

    int n = static_cast<int>(cols.size());
    RatMatrix B = columns_to_matrix(cols, r);
    RatMatrix C = right_inverse(B);
    RatMatrix M = mus_to_matrix(cols, r);
    RatMatrix A = M * B;
    std::vector<int> exps;
    exps.reserve(cols.size());
    for (const auto& c : cols) exps.push_back(c.exponent);
    PowerLinearData data{A, exps};
    PolyMap F = realize_map(data);

    auto verdict = verify_pairing(f, F, B, C);
    if (verdict.status == PairStatus::invalid)
        throw error("gz_lift produced an invalid pairing: " + verdict.detail);
    (void)n;
    return GZPair{f, std::move(F), std::move(B), std::move(C), verdict.status,
                  std::move(data)};
}

GZPair gz_reduce(const PolyMap& F, int r) {
    int n = F.dim();
    if (r >= n) throw error("gz_reduce requires r < n");
    if (r < 1) throw error("gz_reduce requires r >= 1");
    auto h = F.minus_identity();
    PolyMatrix jh = jacobian_of(h);
    auto ker = constant_kernel(jh);
    int kdim = static_cast<int>(ker.size());
    if (r < n - kdim)
        throw error("r too small: need r >= n - dim(ker JH en K^n) = " +
                    std::to_string(n - kdim));
    std::vector<std::vector<Rat>> s(ker.begin(), ker.begin() + (n - r));
    RatMatrix B = matrix_with_kernel(s, n);
    RatMatrix C = right_inverse(B);
    auto cy = linear_forms(C);
    auto fcy = substitute_all(F.components(), cy);
    std::vector<Polynomial> fcomps;
    fcomps.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        Polynomial lhs(r);
        for (int j = 0; j < n; ++j)
            if (!B.at(i, j).is_zero()) lhs += B.at(i, j) * fcy[static_cast<size_t>(j)];
        fcomps.push_back(std::move(lhs));
    }
    PolyMap f(std::move(fcomps));
    auto verdict = verify_pairing(f, F, B, C);
    if (verdict.status == PairStatus::invalid)
        throw error("gz_reduce produced an invalid pairing: " + verdict.detail);
    return GZPair{std::move(f), F, std::move(B), std::move(C), verdict.status, std::nullopt};
}

bool kernel_translation_check(const PolyMap& F, const RatMatrix& B, const RatMatrix& C) {
    int n = F.dim();
    auto h = F.minus_identity();

    // (i) H(X + t y0) = H(X) for each kernel basis vector y0, t fresh
    auto kerB = kernel_basis(B);
    for (const auto& y0 : kerB) {
        std::vector<Polynomial> shift;
        shift.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            Polynomial gj = Polynomial::variable(n + 1, j);
            if (!y0[static_cast<size_t>(j)].is_zero())
                gj += y0[static_cast<size_t>(j)] * Polynomial::variable(n + 1, n);
            shift.push_back(std::move(gj));
        }
        for (const auto& hi : h)
            if (hi.substitute(shift) != hi.lift_arity(n + 1)) return false;
    }

    // (ii) B (CB - I) = 0
    RatMatrix cb = C * B;
    if (!(B * (cb - RatMatrix::identity(n))).is_zero()) return false;

    // (iii) H(CBX) = H(X)
    auto cbx = linear_forms(cb);
    for (const auto& hi : h)
        if (hi.substitute(cbx) != hi) return false;
    return true;
}

GZPair extend_with_power(const GZPair& pair, int i, int d) {
    int r = pair.f.dim(), n = pair.F.dim();
    if (i < 0 || i >= r) throw error("extend_with_power row index out of range");
    if (d < 2) throw error("extend_with_power requires d >= 2");

    std::vector<Polynomial> comps;
    comps.reserve(static_cast<size_t>(n + 1));
    for (const auto& c : pair.F.components()) comps.push_back(c.lift_arity(n + 1));
    Polynomial bx(n + 1);
    for (int j = 0; j < n; ++j)
        if (!pair.B.at(i, j).is_zero())
            bx += pair.B.at(i, j) * Polynomial::variable(n + 1, j);
    comps.push_back(Polynomial::variable(n + 1, n) + bx.pow(static_cast<uint32_t>(d)));
    PolyMap Fext(std::move(comps));

    RatMatrix Bext(r, n + 1);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < n; ++b) Bext.at(a, b) = pair.B.at(a, b);
    RatMatrix Cext(n + 1, r);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < r; ++b) Cext.at(a, b) = pair.C.at(a, b);

    auto verdict = verify_pairing(pair.f, Fext, Bext, Cext);
    std::optional<PowerLinearData> power;
    if (pair.power) {
        RatMatrix Aext(n + 1, n + 1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) Aext.at(a, b) = pair.power->a.at(a, b);
        for (int b = 0; b < n; ++b) Aext.at(n, b) = pair.B.at(i, b);
        std::vector<int> dext = pair.power->d;
        dext.push_back(d);
        power = PowerLinearData{std::move(Aext), std::move(dext)};
    }
    return GZPair{pair.f, std::move(Fext), std::move(Bext), std::move(Cext), verdict.status,
                  std::move(power)};
}

}  // namespace druz
