#include "druz/polynomial.hpp"

#include "druz/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace druz {

Polynomial::Polynomial(int arity) : arity_(arity) {
    if (arity < 0) throw error("negative arity");
}

Polynomial Polynomial::constant(int arity, const Rat& c) {
    Polynomial p(arity);
    if (!c.is_zero()) p.terms_.emplace(Monomial(arity), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int j) {
    if (j < 0 || j >= arity) throw error("variable index out of range");
    std::vector<uint32_t> e(static_cast<size_t>(arity), 0);
    e[static_cast<size_t>(j)] = 1;
    Polynomial p(arity);
    p.terms_.emplace(Monomial(std::move(e)), Rat(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, const Rat& c) {
    Polynomial p(m.arity());
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

Polynomial Polynomial::from_terms(int arity, TermMap terms) {
    Polynomial p(arity);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.arity() != arity) throw error("term arity mismatch");
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::optional<int64_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // leading term first: its degree is the total degree
    return static_cast<int64_t>(terms_.begin()->first.degree());
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::constant_term() const { return coeff(Monomial(arity_)); }

std::optional<int> Polynomial::first_variable() const {
    std::optional<int> best;
    for (const auto& [m, c] : terms_) {
        for (int j = 0; j < arity_; ++j) {
            if (m.exp(j) > 0) {
                if (!best || j < *best) best = j;
                break;
            }
        }
    }
    return best;
}

uint32_t Polynomial::max_exponent(int j) const {
    uint32_t m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.exp(j));
    return m;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint64_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::map<int64_t, Polynomial> Polynomial::homogeneous_parts() const {
    std::map<int64_t, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
        auto d = static_cast<int64_t>(m.degree());
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Polynomial(arity_)).first;
        it->second.terms_.emplace(m, c);
    }
    return parts;
}

Polynomial Polynomial::homogeneous_part(int64_t d) const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_)
        if (static_cast<int64_t>(m.degree()) == d) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::truncated(int64_t max_degree) const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_)
        if (static_cast<int64_t>(m.degree()) <= max_degree) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::without_affine_part() const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_)
        if (m.degree() >= 2) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (arity_ != o.arity_) throw error("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (arity_ != o.arity_) throw error("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return kernels::mul(a, b);
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(uint32_t k) const { return pow_truncated(k, -1); }

Polynomial Polynomial::pow_truncated(uint32_t k, int64_t bound) const {
    Polynomial result = Polynomial::constant(arity_, Rat(1));
    if (bound >= 0) result = result.truncated(bound);
    Polynomial base = bound >= 0 ? truncated(bound) : *this;
    while (k > 0) {
        if (k & 1u) result = kernels::mul(result, base, bound);
        k >>= 1u;
        if (k > 0) base = kernels::mul(base, base, bound);
    }
    return result;
}

Polynomial Polynomial::derivative(int j) const {
    if (j < 0 || j >= arity_) throw error("derivative index out of range");
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exp(j);
        if (e == 0) continue;
        std::vector<uint32_t> exps = m.exps();
        exps[static_cast<size_t>(j)] = e - 1;
        p.terms_.emplace(Monomial(std::move(exps)), c * Rat(static_cast<long>(e)));
    }
    return p;
}

static Polynomial substitute_impl(const Polynomial& p, std::span<const Polynomial> g,
                                  int64_t bound) {
    if (static_cast<int>(g.size()) != p.arity())
        throw error("substitution arity mismatch");
    int out_arity = g.empty() ? 0 : g[0].arity();
    for (const auto& gi : g)
        if (gi.arity() != out_arity) throw error("substitution components disagree on arity");

    // cache powers of each g_j up to the largest exponent used
    std::vector<std::vector<Polynomial>> powers(g.size());
    for (size_t j = 0; j < g.size(); ++j) {
        uint32_t maxe = p.max_exponent(static_cast<int>(j));
        if (maxe == 0) continue;
        powers[j].reserve(maxe + 1);
        powers[j].push_back(Polynomial::constant(out_arity, Rat(1)));
        for (uint32_t k = 1; k <= maxe; ++k)
            powers[j].push_back(kernels::mul(powers[j].back(), g[j], bound));
    }

    Polynomial acc(out_arity);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(out_arity, c);
        for (size_t j = 0; j < g.size(); ++j) {
            uint32_t e = m.exp(static_cast<int>(j));
            if (e == 0) continue;
            t = kernels::mul(t, powers[j][e], bound);
            if (t.is_zero()) break;
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> g) const {
    return substitute_impl(*this, g, -1);
}

Polynomial Polynomial::substitute_truncated(std::span<const Polynomial> g,
                                            int64_t bound) const {
    return substitute_impl(*this, g, bound);
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != arity_) throw error("evaluation arity mismatch");
    std::vector<std::vector<Rat>> powers(point.size());
    for (size_t j = 0; j < point.size(); ++j) {
        uint32_t maxe = max_exponent(static_cast<int>(j));
        powers[j].reserve(maxe + 1);
        powers[j].push_back(Rat(1));
        for (uint32_t k = 1; k <= maxe; ++k) powers[j].push_back(powers[j].back() * point[j]);
    }
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (size_t j = 0; j < point.size(); ++j) {
            uint32_t e = m.exp(static_cast<int>(j));
            if (e) t *= powers[j][e];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::lift_arity(int new_arity) const {
    if (new_arity < arity_) throw error("lift_arity cannot shrink");
    Polynomial p(new_arity);
    for (const auto& [m, c] : terms_) {
        std::vector<uint32_t> e = m.exps();
        e.resize(static_cast<size_t>(new_arity), 0);
        p.terms_.emplace(Monomial(std::move(e)), c);
    }
    return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (arity_ != divisor.arity_) throw error("polynomial arity mismatch");
    if (divisor.is_zero()) throw error("division by the zero polynomial");
    Polynomial rem = *this;
    Polynomial quot(arity_);
    const auto& dlead = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.begin();
        if (!dlead.first.divides(rlead.first)) return std::nullopt;
        Monomial qm = dlead.first.quotient_of(rlead.first);
        Rat qc = rlead.second / dlead.second;
        quot.add_term(qm, qc);
        rem -= kernels::mul(Polynomial::term(qm, qc), divisor);
    }
    return quot;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    if (m.arity() != arity_) throw error("term arity mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<std::string> default_var_names(int arity) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(arity));
    for (int j = 1; j <= arity; ++j) names.push_back("x" + std::to_string(j));
    return names;
}

std::string Polynomial::str() const {
    auto names = default_var_names(arity_);
    return str(names);
}

std::string Polynomial::str(std::span<const std::string> names) const {
    if (static_cast<int>(names.size()) != arity_) throw error("name list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Rat mag = neg ? -c : c;
        if (m.is_constant()) {
            out << mag.str();
            continue;
        }
        bool need_star = false;
        if (!mag.is_one()) {
            out << mag.str();
            need_star = true;
        }
        for (int j = 0; j < arity_; ++j) {
            uint32_t e = m.exp(j);
            if (e == 0) continue;
            if (need_star) out << "*";
            out << names[static_cast<size_t>(j)];
            if (e > 1) out << "^" << e;
            need_star = true;
        }
    }
    return out.str();
}

}  // namespace druz
