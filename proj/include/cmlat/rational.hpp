#ifndef CMLAT_RATIONAL_HPP
#define CMLAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cmlat/errors.hpp"

namespace cmlat {

using Integer = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator and denominator.
// Always stored normalized: gcd(num, den) = 1 and den >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d);
    Rational(long long n, long long d) : Rational(Integer(n), Integer(d)) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Integer floor() const;
    Integer ceil() const;

    Rational reciprocal() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // "P/Q", or just "P" when integral.
    std::string str() const;

    // Accepts "P", "P/Q", optional leading '-'.  Throws InputError on
    // malformed text or zero denominator.
    static Rational parse(const std::string& text);

private:
    Integer num_;
    Integer den_;
    void normalize();
};

}  // namespace cmlat

#endif
