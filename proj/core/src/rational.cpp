#include "symq/rational.hpp"

namespace symq {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return to_string(re_);
    std::string im_part = to_string(im_) + "*i";
    if (re_.is_zero()) return im_part;
    if (im_ > 0) return to_string(re_) + "+" + im_part;
    return to_string(re_) + im_part;
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    Integer r = 1;
    for (long j = 0; j < k; ++j) {
        r *= (n - j);
        r /= (j + 1);
    }
    return Rational(r);
}

GQ gq_pow_i(long n) {
    long m = ((n % 4) + 4) % 4;
    switch (m) {
        case 0: return GQ(1);
        case 1: return GQ::i();
        case 2: return GQ(-1);
        default: return -GQ::i();
    }
}

}  // namespace symq
