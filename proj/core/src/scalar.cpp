#include "qpl/scalar.hpp"

#include <ostream>

namespace qpl {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw BadParameter("empty rational literal");
    Rational value;
    if (value.set_str(text, 10) != 0)
        throw BadParameter("malformed rational literal: " + text);
    if (sgn(value.get_den()) == 0)
        throw BadParameter("zero denominator in rational literal: " + text);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

Rational Scalar::abs_sq() const {
    Rational out = re_ * re_;
    if (sgn(im_) != 0) out += im_ * im_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (sgn(rhs.re_) != 0) re_ += rhs.re_;
    if (sgn(rhs.im_) != 0) im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (sgn(rhs.re_) != 0) re_ -= rhs.re_;
    if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
    return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    const bool lr = sgn(lhs.re_) != 0, li = sgn(lhs.im_) != 0;
    const bool rr = sgn(rhs.re_) != 0, ri = sgn(rhs.im_) != 0;
    Rational re(0), im(0);
    if (lr && rr) re = lhs.re_ * rhs.re_;
    if (li && ri) re -= lhs.im_ * rhs.im_;
    if (lr && ri) im = lhs.re_ * rhs.im_;
    if (li && rr) im += lhs.im_ * rhs.re_;
    return Scalar(std::move(re), std::move(im));
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    const Rational norm = rhs.abs_sq();
    if (sgn(norm) == 0) throw BadParameter("division by zero scalar");
    Scalar out = lhs * rhs.conj();
    return Scalar(out.re() / norm, out.im() / norm);
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
    os << format_rational(value.re());
    if (sgn(value.im()) != 0) os << (sgn(value.im()) > 0 ? "+" : "") << format_rational(value.im()) << "i";
    return os;
}

Scalar pow(const Scalar& base, Int exponent) {
    if (exponent < 0) return pow(Scalar(1) / base, -exponent);
    Scalar out(1);
    Scalar factor = base;
    Int e = exponent;
    while (e > 0) {
        if (e & 1) out = out * factor;
        factor = factor * factor;
        e >>= 1;
    }
    return out;
}

}  // namespace qpl
