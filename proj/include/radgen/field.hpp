#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "radgen/errors.hpp"

namespace radgen {

using Integer = mpz_class;

// Exact rational number, always in lowest terms with positive denominator
// (GMP maintains that canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ValueError("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den);
    }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw ValueError("division by zero in Q");
        return Rational(1 / v_);
    }
    Rational operator/(const Rational& o) const { return *this * o.inverse(); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Element of the prime field F_p; the residue is kept in [0, p).
// Each value carries its modulus so mixed-modulus arithmetic can be rejected.
class GfP {
public:
    GfP() : r_(0), p_(0) {}
    GfP(std::uint64_t residue, std::uint64_t p) : r_(residue % p), p_(p) {}

    static GfP from_integer(const Integer& n, std::uint64_t p) {
        Integer m = n % Integer(static_cast<unsigned long>(p));
        if (m < 0) m += Integer(static_cast<unsigned long>(p));
        return GfP(m.get_ui(), p);
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    GfP operator-() const { return GfP(r_ == 0 ? 0 : p_ - r_, p_); }
    GfP operator+(const GfP& o) const {
        check(o);
        std::uint64_t s = r_ + o.r_;
        return GfP(s >= p_ ? s - p_ : s, p_);
    }
    GfP operator-(const GfP& o) const { return *this + (-o); }
    GfP operator*(const GfP& o) const {
        check(o);
        return GfP(static_cast<std::uint64_t>(
                       (unsigned __int128)r_ * o.r_ % p_),
                   p_);
    }
    GfP& operator+=(const GfP& o) { *this = *this + o; return *this; }
    GfP& operator-=(const GfP& o) { *this = *this - o; return *this; }
    GfP& operator*=(const GfP& o) { *this = *this * o; return *this; }

    GfP inverse() const {
        if (r_ == 0) throw ValueError("division by zero in F_p");
        // extended Euclid on (r, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_);
        std::int64_t new_r = static_cast<std::int64_t>(r_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return GfP(static_cast<std::uint64_t>(t), p_);
    }
    GfP operator/(const GfP& o) const { return *this * o.inverse(); }

    bool operator==(const GfP& o) const { return r_ == o.r_ && p_ == o.p_; }
    bool operator!=(const GfP& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(r_); }

private:
    void check(const GfP& o) const {
        if (p_ != o.p_)
            throw ContextMismatchError("mixed F_p moduli: " + std::to_string(p_) +
                                       " vs " + std::to_string(o.p_));
    }
    std::uint64_t r_;
    std::uint64_t p_;
};

// Uniform hooks the templated ring code needs from a coefficient field.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr const char* kind = "Q";
    static Rational zero(const Rational&) { return Rational::zero(); }
    static Rational one(const Rational&) { return Rational::one(); }
    static Rational from_int(long n, const Rational&) { return Rational(n); }
    // den is coprime to nothing special over Q; den == 0 already rejected.
    static Rational from_fraction(const Integer& num, const Integer& den, const Rational&) {
        return Rational(num, den);
    }
    static std::string descriptor(const Rational&) { return "Q"; }
    static bool printed_with_sign() { return true; }
};

template <>
struct FieldTraits<GfP> {
    static constexpr const char* kind = "Fp";
    static GfP zero(const GfP& proto) { return GfP(0, proto.modulus()); }
    static GfP one(const GfP& proto) { return GfP(1, proto.modulus()); }
    static GfP from_int(long n, const GfP& proto) {
        return GfP::from_integer(Integer(n), proto.modulus());
    }
    static GfP from_fraction(const Integer& num, const Integer& den, const GfP& proto) {
        GfP d = GfP::from_integer(den, proto.modulus());
        if (d.is_zero())
            throw ValueError("denominator divisible by p=" + std::to_string(proto.modulus()));
        return GfP::from_integer(num, proto.modulus()) / d;
    }
    static std::string descriptor(const GfP& proto) {
        return "Fp:" + std::to_string(proto.modulus());
    }
    static bool printed_with_sign() { return false; }
};

}  // namespace radgen
