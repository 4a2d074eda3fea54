#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldp/lattice.hpp"

namespace ldp {

enum class ValidationErrorKind {
    TooFewRays,
    NonPrimitiveRay,
    DuplicateRay,
    NotCounterclockwise,
    BadWinding,
    NotStrictlyConvex,
};

std::string_view to_string(ValidationErrorKind kind);

/// A rejected ray list. `index` is 1-based into the input list (0 when the
/// failure is not attached to a single ray, e.g. BadWinding).
class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, std::size_t index);

    ValidationErrorKind kind() const { return kind_; }
    std::size_t index() const { return index_; }

private:
    ValidationErrorKind kind_;
    std::size_t index_;
};

/// Malformed vertex text; `token` is the offending piece of input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string token, const std::string& why);

    const std::string& token() const { return token_; }

private:
    std::string token_;
};

/// Counterclockwise cycle of distinct primitive rays winding once around the
/// origin, with det2(v_i, v_{i+1}) >= 1 for every consecutive pair.
/// Only obtainable through validate_fan (or operations built on it).
class FanCycle {
public:
    std::size_t size() const { return rays_.size(); }
    std::span<const Vec2> rays() const { return rays_; }

    /// Cyclic 1-based access: ray(0) == ray(d), ray(d + 1) == ray(1).
    Vec2 ray(std::ptrdiff_t i) const;

    /// det2(v_i, v_{i+1}), 1-based cyclic.
    Int cone_det(std::ptrdiff_t i) const;

    friend bool operator==(const FanCycle&, const FanCycle&) = default;

private:
    friend FanCycle validate_fan(std::span<const Vec2>);
    explicit FanCycle(std::vector<Vec2> rays) : rays_(std::move(rays)) {}

    std::vector<Vec2> rays_;
};

/// A fan whose rays, read as points, are in strictly convex position.
class LdpPolygon {
public:
    const FanCycle& fan() const { return fan_; }
    std::size_t size() const { return fan_.size(); }
    std::span<const Vec2> vertices() const { return fan_.rays(); }

    friend bool operator==(const LdpPolygon&, const LdpPolygon&) = default;

private:
    friend LdpPolygon validate_ldp_polygon(std::span<const Vec2>);
    explicit LdpPolygon(FanCycle fan) : fan_(std::move(fan)) {}

    FanCycle fan_;
};

/// Throws ValidationError. The input order is kept as given.
FanCycle validate_fan(std::span<const Vec2> points);

/// validate_fan plus strict convexity of the vertices. Throws ValidationError.
LdpPolygon validate_ldp_polygon(std::span<const Vec2> points);

/// Orders a vertex set counterclockwise around the origin, starting from the
/// first given point, then validates it as an LDP-polygon.
LdpPolygon ldp_polygon_from_vertex_set(std::span<const Vec2> points);

/// Sum of det2(v_i, v_{i+1}); twice the Euclidean area of the polygon.
Int twice_area(const FanCycle& fan);
inline Int twice_area(const LdpPolygon& q) { return twice_area(q.fan()); }

/// Equality up to cyclic rotation (orientation is not reversed).
bool same_cycle(std::span<const Vec2> a, std::span<const Vec2> b);

/// Parses "x,y;x,y;..." with optional whitespace. Throws ParseError.
std::vector<Vec2> parse_vertices(std::string_view text);

/// Inverse of parse_vertices, without whitespace.
std::string format_vertices(std::span<const Vec2> points);

} // namespace ldp
