#pragma once

#include "bettikit/rational.hpp"

#include <cstdint>
#include <string>

namespace bettikit {

/// Coefficient field: exact rationals (characteristic 0) or GF(p) for a
/// prime p < 2^15. Scalars are always carried as exact rationals; over
/// GF(p) they are interpreted via reduction mod p.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec gf(std::uint32_t p);

    /// Accepts "q", "Q", "0", or "gf:p" / "gf(p)" / "p" for a prime p.
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    std::string name() const {
        return is_rationals() ? "q" : "gf:" + std::to_string(p_);
    }

    bool operator==(const FieldSpec&) const = default;

private:
    std::uint32_t p_ = 0;  // 0 encodes the rationals
};

/// Field arithmetic on the canonical rational representatives. Over GF(p)
/// every result is the residue in [0, p); inputs with denominator divisible
/// by p are rejected.
class FieldOps {
public:
    explicit FieldOps(FieldSpec f) : field_(f) {}

    const FieldSpec& field() const { return field_; }

    Rational canon(const Rational& a) const;
    bool is_zero(const Rational& a) const;
    Rational add(const Rational& a, const Rational& b) const;
    Rational sub(const Rational& a, const Rational& b) const;
    Rational mul(const Rational& a, const Rational& b) const;
    Rational neg(const Rational& a) const;
    Rational inv(const Rational& a) const;

    /// Residue of a in [0, p); only valid for GF(p).
    std::int64_t residue(const Rational& a) const;

private:
    FieldSpec field_;
};

bool is_prime(std::uint32_t n);

/// Modular inverse in GF(p); throws on zero.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace bettikit
