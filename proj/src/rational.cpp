#include "cmlat/rational.hpp"

#include <cctype>

namespace cmlat {

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw InputError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Integer Rational::floor() const {
    Integer q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Integer Rational::ceil() const {
    Integer q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw InputError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw InputError("division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    std::size_t slash = text.find('/');
    auto parse_int = [](const std::string& part) -> Integer {
        if (part.empty()) throw InputError("malformed rational");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw InputError("malformed rational");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw InputError("malformed rational: '" + part + "'");
        return Integer(part);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer n = parse_int(text.substr(0, slash));
    Integer d = parse_int(text.substr(slash + 1));
    if (d == 0) throw InputError("rational with zero denominator");
    return Rational(n, d);
}

}  // namespace cmlat
