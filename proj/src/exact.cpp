#include "bellfowler/exact.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace bellfowler {

namespace {

bool valid_decimal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int Int::from_string(const std::string& s) {
    if (!valid_decimal(s)) throw DomainError("not a decimal integer: '" + s + "'");
    return Int(mpz_class(s, 10));
}

Int div_exact(const Int& a, const Int& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    if (r != 0) throw DomainError("inexact integer division: " + a.str() + " / " + b.str());
    return Int(q);
}

Rat::Rat(const Int& num, const Int& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int::from_string(s));
    Int num = Int::from_string(s.substr(0, slash));
    Int den = Int::from_string(s.substr(slash + 1));
    if (den.is_zero()) throw DomainError("rational with zero denominator: '" + s + "'");
    return Rat(num, den);
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.str(); }
std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

double log_value(const Int& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive value");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, x.raw().get_mpz_t());
    return std::log(m) + static_cast<double>(exp2) * std::log(2.0);
}

double log_value(const Rat& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive value");
    return log_value(x.num()) - log_value(x.den());
}

} // namespace bellfowler
