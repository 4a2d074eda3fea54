#include "ldp/lattice.hpp"

#include <sstream>

namespace ldp {

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int neg(Int a) { return sub(0, a); }

} // namespace checked

Int gcd(Int a, Int b) {
    // Work in unsigned so that |INT64_MIN| is representable.
    auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (ub != 0) {
        auto t = ua % ub;
        ua = ub;
        ub = t;
    }
    if (ua > static_cast<std::uint64_t>(INT64_MAX))
        throw OverflowError("gcd does not fit in 64 bits");
    return static_cast<Int>(ua);
}

Vec2 operator+(Vec2 u, Vec2 v) { return {checked::add(u.x, v.x), checked::add(u.y, v.y)}; }
Vec2 operator-(Vec2 u, Vec2 v) { return {checked::sub(u.x, v.x), checked::sub(u.y, v.y)}; }

Int det2(Vec2 u, Vec2 v) {
    return checked::sub(checked::mul(u.x, v.y), checked::mul(v.x, u.y));
}

bool is_primitive(Vec2 v) { return gcd(v.x, v.y) == 1; }

int half_plane(Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(Vec2 u, Vec2 v) {
    int hu = half_plane(u), hv = half_plane(v);
    if (hu != hv)
        return hu < hv;
    return det2(u, v) > 0;
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
    Int dt = det();
    if (dt != 1 && dt != -1)
        throw ContractError("matrix " + to_string() + " is not unimodular");
}

Int UnimodularMap::det() const {
    return checked::sub(checked::mul(a_, d_), checked::mul(b_, c_));
}

Vec2 UnimodularMap::operator()(Vec2 v) const {
    return {checked::add(checked::mul(a_, v.x), checked::mul(b_, v.y)),
            checked::add(checked::mul(c_, v.x), checked::mul(d_, v.y))};
}

UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r) {
    using namespace checked;
    return {add(mul(l.a_, r.a_), mul(l.b_, r.c_)), add(mul(l.a_, r.b_), mul(l.b_, r.d_)),
            add(mul(l.c_, r.a_), mul(l.d_, r.c_)), add(mul(l.c_, r.b_), mul(l.d_, r.d_))};
}

std::string UnimodularMap::to_string() const {
    std::ostringstream os;
    os << "[[" << a_ << ',' << b_ << "],[" << c_ << ',' << d_ << "]]";
    return os.str();
}

Vec2 apply_map(const UnimodularMap& m, Vec2 v) { return m(v); }

std::optional<UnimodularMap> solve_map(Vec2 u1, Vec2 u2, Vec2 w1, Vec2 w2) {
    using namespace checked;
    const Int den = det2(u1, u2);
    if (den == 0)
        throw ContractError("solve_map: source vectors are linearly dependent");

    // M = W * U^{-1} with U = [u1 u2], W = [w1 w2] as columns;
    // U^{-1} = adj(U) / den, adj(U) = [[u2.y, -u2.x], [-u1.y, u1.x]].
    const Int na = sub(mul(w1.x, u2.y), mul(w2.x, u1.y));
    const Int nb = sub(mul(w2.x, u1.x), mul(w1.x, u2.x));
    const Int nc = sub(mul(w1.y, u2.y), mul(w2.y, u1.y));
    const Int nd = sub(mul(w2.y, u1.x), mul(w1.y, u2.x));
    if (na % den != 0 || nb % den != 0 || nc % den != 0 || nd % den != 0)
        return std::nullopt;
    const Int a = na / den, b = nb / den, c = nc / den, d = nd / den;
    const Int dt = sub(mul(a, d), mul(b, c));
    if (dt != 1 && dt != -1)
        return std::nullopt;
    return UnimodularMap(a, b, c, d);
}

} // namespace ldp
