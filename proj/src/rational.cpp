#include "lieslice/rational.hpp"

#include <ostream>

namespace lieslice {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw InputError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw InputError("rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw InputError("zero raised to a negative power");
    mpq_class base = e > 0 ? v_ : mpq_class(1) / v_;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc(1);
    mpq_class p = base;
    while (k) {
        if (k & 1) acc *= p;
        k >>= 1;
        if (k) p *= p;
    }
    acc.canonicalize();
    return Rational(acc);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace lieslice
