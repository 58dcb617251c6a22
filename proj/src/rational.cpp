#include "druz/rational.hpp"

#include <cctype>
#include <ostream>

namespace druz {

Rat::Rat(long num, long den) {
    if (den == 0) throw error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpz_class num, mpz_class den) {
    if (den == 0) throw error("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inv() const {
    if (is_zero()) throw error("division by zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(std::move(n), std::move(d));
}

static bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat Rat::from_string(const std::string& text) {
    auto slash = text.find('/');
    std::string ns = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_integer_text(ns) || !valid_integer_text(ds))
        throw error("malformed rational literal '" + text + "'");
    mpz_class n(ns), d(ds);
    if (d == 0) throw error("rational with zero denominator");
    return Rat(std::move(n), std::move(d));
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::optional<Rat> nth_root(const Rat& a, unsigned long n) {
    if (n == 0) throw error("0-th root is undefined");
    if (n == 1) return a;
    if (a.is_zero()) return Rat(0);
    if (a.sign() < 0 && n % 2 == 0) return std::nullopt;
    mpz_class an = a.num() < 0 ? mpz_class(-a.num()) : a.num();
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n);
    int exact_d = mpz_root(rd.get_mpz_t(), a.den().get_mpz_t(), n);
    if (!exact_n || !exact_d) return std::nullopt;
    if (a.sign() < 0) rn = -rn;
    return Rat(std::move(rn), std::move(rd));
}

}  // namespace druz
