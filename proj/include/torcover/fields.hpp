#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace torcover {

// Field policies. The elimination kernels and the polynomial ring are
// templated on these; a policy carries whatever runtime state the field
// needs (the modulus) and is cheap to copy.

struct RationalField {
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (is_zero(a))
            throw std::domain_error("division by zero");
        return 1 / a;
    }
    /// a -= q * b, in place.
    void sub_mul(value_type& a, const value_type& q, const value_type& b) const { a -= q * b; }

    mpq_class to_rational(const value_type& a) const { return a; }
    std::string to_string(const value_type& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2)
            throw std::invalid_argument("prime field modulus must be >= 2");
    }

    std::uint32_t modulus() const noexcept { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_mpz(const mpz_class& v) const {
        return static_cast<value_type>(mpz_fdiv_ui(v.get_mpz_t(), p_));
    }

    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t(a) * b) % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const {
        if (a == 0)
            throw std::domain_error("division by zero");
        // Extended Euclid on (a, p).
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return static_cast<value_type>(t < 0 ? t + p_ : t);
    }
    void sub_mul(value_type& a, value_type q, value_type b) const { a = sub(a, mul(q, b)); }

    mpq_class to_rational(value_type a) const { return mpq_class(static_cast<unsigned long>(a)); }
    std::string to_string(value_type a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

} // namespace torcover
