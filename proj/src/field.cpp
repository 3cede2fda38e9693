#include "bettikit/field.hpp"

#include <cctype>
#include <stdexcept>

namespace bettikit {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += p;
    return t;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
    if (p >= (1u << 15)) throw std::invalid_argument("GF(p) requires p < 2^15");
    if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime, got " + std::to_string(p));
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.empty() || s == "q" || s == "0" || s == "rational" || s == "rationals")
        return rationals();
    std::string num = s;
    if (s.rfind("gf:", 0) == 0) num = s.substr(3);
    else if (s.rfind("gf(", 0) == 0 && s.back() == ')') num = s.substr(3, s.size() - 4);
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(num, &pos);
        if (pos != num.size()) throw std::invalid_argument("");
        return gf(static_cast<std::uint32_t>(v));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("unrecognized field '" + text + "' (expected q or gf:p)");
    }
}

std::int64_t FieldOps::residue(const Rational& a) const {
    const std::int64_t p = field_.characteristic();
    Integer num = boost::multiprecision::numerator(a) % p;
    Integer den = boost::multiprecision::denominator(a) % p;
    std::int64_t n = static_cast<std::int64_t>(num);
    std::int64_t d = static_cast<std::int64_t>(den);
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("scalar has denominator divisible by " + std::to_string(p));
    return n * mod_inverse(d, p) % p;
}

Rational FieldOps::canon(const Rational& a) const {
    if (field_.is_rationals()) return a;
    return Rational(residue(a));
}

bool FieldOps::is_zero(const Rational& a) const {
    if (field_.is_rationals()) return a == 0;
    return residue(a) == 0;
}

Rational FieldOps::add(const Rational& a, const Rational& b) const {
    if (field_.is_rationals()) return a + b;
    return Rational((residue(a) + residue(b)) % field_.characteristic());
}

Rational FieldOps::sub(const Rational& a, const Rational& b) const {
    if (field_.is_rationals()) return a - b;
    const std::int64_t p = field_.characteristic();
    return Rational((residue(a) - residue(b) % p + p) % p);
}

Rational FieldOps::mul(const Rational& a, const Rational& b) const {
    if (field_.is_rationals()) return a * b;
    return Rational(residue(a) * residue(b) % field_.characteristic());
}

Rational FieldOps::neg(const Rational& a) const {
    if (field_.is_rationals()) return -a;
    const std::int64_t p = field_.characteristic();
    return Rational((p - residue(a)) % p);
}

Rational FieldOps::inv(const Rational& a) const {
    if (field_.is_rationals()) {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    return Rational(mod_inverse(residue(a), field_.characteristic()));
}

}  // namespace bettikit
