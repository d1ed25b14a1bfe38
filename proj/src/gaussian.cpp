#include "starq/gaussian.hpp"

#include <stdexcept>

namespace starq {

Gaussian Gaussian::of(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Gaussian(q);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gaussian Gaussian::operator/(const Gaussian& o) const {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("Gaussian: division by zero");
    Gaussian num = *this * o.conj();
    return Gaussian(num.re / n, num.im / n);
}

Gaussian Gaussian::pow(unsigned k) const {
    Gaussian acc(1);
    Gaussian base = *this;
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::string Gaussian::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) {
        s += re.get_str();
        if (im > 0) s += "+";
    }
    if (im != 0) {
        if (im == 1) {
            s += "i";
        } else if (im == -1) {
            s += "-i";
        } else {
            s += im.get_str() + "*i";
        }
    }
    return s;
}

}  // namespace starq
