#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "bellfowler/errors.hpp"

namespace bellfowler {

// Arbitrary-precision signed integer. Thin value wrapper around GMP's
// mpz_class; every operation is exact and equality is decidable.
// Serializes to/from a plain decimal string (optional leading '-').
class Int {
  public:
    Int() : v_(0) {}
    Int(long x) : v_(x) {}
    Int(int x) : v_(static_cast<long>(x)) {}
    explicit Int(mpz_class v) : v_(std::move(v)) {}

    static Int from_string(const std::string& s);
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }
    // sign: -1, 0, +1
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
    Int& operator*=(long x) { v_ *= x; return *this; }

    friend Int operator+(const Int& a, const Int& b) { return Int(mpz_class(a.v_ + b.v_)); }
    friend Int operator-(const Int& a, const Int& b) { return Int(mpz_class(a.v_ - b.v_)); }
    friend Int operator*(const Int& a, const Int& b) { return Int(mpz_class(a.v_ * b.v_)); }
    friend Int operator-(const Int& a) { return Int(mpz_class(-a.v_)); }

    // Exact quotient; throws DomainError if b is zero or does not divide a.
    friend Int div_exact(const Int& a, const Int& b);

    Int pow(unsigned long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
        return Int(r);
    }
    Int abs() const { return Int(mpz_class(::abs(v_))); }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpz_class& raw() const { return v_; }
    mpz_class& raw() { return v_; }

  private:
    mpz_class v_;
};

// Exact rational number, always in lowest terms with positive denominator.
// Arithmetic is exact and closed; division by zero throws DomainError.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long x) : v_(x) {}
    Rat(int x) : v_(static_cast<long>(x)) {}
    Rat(const Int& x) : v_(x.raw()) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p/q" or a plain integer, optional leading '-'.
    static Rat from_string(const std::string& s);
    // "p/q", or just "p" when the value is an integer.
    std::string str() const;

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    double to_double() const { return v_.get_d(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) { Rat r(a); r /= b; return r; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    Rat pow(unsigned long e) const { return Rat(num().pow(e), den().pow(e)); }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Int& x);
std::ostream& operator<<(std::ostream& os, const Rat& x);

// Natural log of a positive Int, computed from mantissa + exponent so that
// values far beyond the binary64 range stay representable.
double log_value(const Int& x);
double log_value(const Rat& x);

} // namespace bellfowler
