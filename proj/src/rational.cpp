#include "ldp/rational.hpp"

namespace ldp {

Rational::Rational(Int num, Int den) {
    if (den == 0)
        throw ContractError("rational with zero denominator");
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    const Int g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    using namespace checked;
    const Int g = gcd(a.den_, b.den_);
    const Int lcm = mul(a.den_ / g, b.den_);
    return {add(mul(a.num_, lcm / a.den_), mul(b.num_, lcm / b.den_)), lcm};
}

Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const Int g1 = gcd(a.num_, b.den_);
    const Int g2 = gcd(b.num_, a.den_);
    return {checked::mul(a.num_ / g1, b.num_ / g2), checked::mul(a.den_ / g2, b.den_ / g1)};
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace ldp
