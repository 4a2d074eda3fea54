#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ldp {

using Int = std::int64_t;

/// Raised when a checked integer operation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Raised when a caller violates a documented precondition.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);

} // namespace checked

/// gcd of absolute values; gcd(0, n) = |n| and gcd(0, 0) = 0.
Int gcd(Int a, Int b);

/// An integer vector of the plane lattice. Ordered lexicographically (x, then y).
struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

Vec2 operator+(Vec2 u, Vec2 v);
Vec2 operator-(Vec2 u, Vec2 v);

/// Signed determinant x_u*y_v - x_v*y_u.
Int det2(Vec2 u, Vec2 v);

bool is_primitive(Vec2 v);

/// Exact angular order around the origin starting at the positive x-axis.
/// Returns true iff the direction of u comes strictly before that of v.
/// Both vectors must be nonzero.
bool angle_less(Vec2 u, Vec2 v);

/// 0 for directions in [0, pi), 1 for [pi, 2pi).
int half_plane(Vec2 v);

/// A 2x2 integer matrix [[a, b], [c, d]] with determinant +1 or -1.
class UnimodularMap {
public:
    /// Identity.
    UnimodularMap() = default;

    /// Throws ContractError unless a*d - b*c is +1 or -1.
    UnimodularMap(Int a, Int b, Int c, Int d);

    static UnimodularMap identity() { return {}; }
    static UnimodularMap swap() { return {0, 1, 1, 0}; }

    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }
    Int d() const { return d_; }

    Int det() const;

    Vec2 operator()(Vec2 v) const;

    /// Composition: (lhs * rhs)(v) = lhs(rhs(v)).
    friend UnimodularMap operator*(const UnimodularMap& lhs, const UnimodularMap& rhs);

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

    /// "[[a,b],[c,d]]"
    std::string to_string() const;

private:
    Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

Vec2 apply_map(const UnimodularMap& m, Vec2 v);

/// The unique rational M with M*u1 = w1 and M*u2 = w2, if it is integral and
/// unimodular. Requires det2(u1, u2) != 0.
std::optional<UnimodularMap> solve_map(Vec2 u1, Vec2 u2, Vec2 w1, Vec2 w2);

} // namespace ldp
