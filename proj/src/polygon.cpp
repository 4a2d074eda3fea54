#include "ldp/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace ldp {

std::string_view to_string(ValidationErrorKind kind) {
    switch (kind) {
    case ValidationErrorKind::TooFewRays: return "TooFewRays";
    case ValidationErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ValidationErrorKind::DuplicateRay: return "DuplicateRay";
    case ValidationErrorKind::NotCounterclockwise: return "NotCounterclockwise";
    case ValidationErrorKind::BadWinding: return "BadWinding";
    case ValidationErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    }
    return "?";
}

namespace {

std::string describe(ValidationErrorKind kind, std::size_t index) {
    std::string s(to_string(kind));
    if (index != 0)
        s += "(" + std::to_string(index) + ")";
    return s;
}

std::size_t cyclic_index(std::ptrdiff_t i, std::size_t d) {
    auto n = static_cast<std::ptrdiff_t>(d);
    return static_cast<std::size_t>(((i - 1) % n + n) % n);
}

} // namespace

ValidationError::ValidationError(ValidationErrorKind kind, std::size_t index)
    : std::runtime_error(describe(kind, index)), kind_(kind), index_(index) {}

ParseError::ParseError(std::string token, const std::string& why)
    : std::runtime_error("cannot parse '" + token + "': " + why), token_(std::move(token)) {}

Vec2 FanCycle::ray(std::ptrdiff_t i) const { return rays_[cyclic_index(i, rays_.size())]; }

Int FanCycle::cone_det(std::ptrdiff_t i) const { return det2(ray(i), ray(i + 1)); }

FanCycle validate_fan(std::span<const Vec2> points) {
    using K = ValidationErrorKind;
    const std::size_t d = points.size();
    if (d < 3)
        throw ValidationError(K::TooFewRays, 0);

    for (std::size_t i = 0; i < d; ++i)
        if (!is_primitive(points[i]))
            throw ValidationError(K::NonPrimitiveRay, i + 1);

    std::set<Vec2> seen;
    for (std::size_t i = 0; i < d; ++i)
        if (!seen.insert(points[i]).second)
            throw ValidationError(K::DuplicateRay, i + 1);

    // Each step is a counterclockwise turn by an angle in (0, pi); the number
    // of steps that pass the positive x-axis is the winding number.
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Vec2 u = points[i], v = points[(i + 1) % d];
        if (det2(u, v) <= 0)
            throw ValidationError(K::NotCounterclockwise, i + 1);
        if (!angle_less(u, v))
            ++wraps;
    }
    if (wraps != 1)
        throw ValidationError(K::BadWinding, 0);

    return FanCycle({points.begin(), points.end()});
}

LdpPolygon validate_ldp_polygon(std::span<const Vec2> points) {
    FanCycle fan = validate_fan(points);
    const std::size_t d = points.size();
    for (std::size_t i = 0; i < d; ++i) {
        const Vec2 prev = points[(i + d - 1) % d], cur = points[i], next = points[(i + 1) % d];
        if (det2(cur - prev, next - cur) <= 0)
            throw ValidationError(ValidationErrorKind::NotStrictlyConvex, i + 1);
    }
    return LdpPolygon(std::move(fan));
}

LdpPolygon ldp_polygon_from_vertex_set(std::span<const Vec2> points) {
    if (points.empty())
        throw ValidationError(ValidationErrorKind::TooFewRays, 0);
    std::set<Vec2> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_primitive(points[i]))
            throw ValidationError(ValidationErrorKind::NonPrimitiveRay, i + 1);
        if (!seen.insert(points[i]).second)
            throw ValidationError(ValidationErrorKind::DuplicateRay, i + 1);
    }
    std::vector<Vec2> sorted(points.begin(), points.end());
    std::stable_sort(sorted.begin(), sorted.end(), angle_less);
    auto first = std::find(sorted.begin(), sorted.end(), points.front());
    std::rotate(sorted.begin(), first, sorted.end());
    return validate_ldp_polygon(sorted);
}

Int twice_area(const FanCycle& fan) {
    Int sum = 0;
    for (std::size_t i = 1; i <= fan.size(); ++i)
        sum = checked::add(sum, fan.cone_det(static_cast<std::ptrdiff_t>(i)));
    return sum;
}

bool same_cycle(std::span<const Vec2> a, std::span<const Vec2> b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    const std::size_t d = a.size();
    for (std::size_t shift = 0; shift < d; ++shift) {
        bool equal = true;
        for (std::size_t i = 0; i < d && equal; ++i)
            equal = a[i] == b[(i + shift) % d];
        if (equal)
            return true;
    }
    return false;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

Int parse_int(std::string_view token) {
    const std::string_view t = trim(token);
    Int value = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (t.empty())
        throw ParseError(std::string(token), "expected an integer");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(std::string(t), "integer out of range");
    if (ec != std::errc() || ptr != last)
        throw ParseError(std::string(t), "expected an integer");
    return value;
}

} // namespace

std::vector<Vec2> parse_vertices(std::string_view text) {
    std::vector<Vec2> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string_view pair = text.substr(pos, end - pos);
        pos = end + 1;
        if (trim(pair).empty()) {
            // A single trailing separator is tolerated.
            if (end == text.size() && !out.empty())
                break;
            throw ParseError(std::string(pair), "empty vertex");
        }
        const std::size_t comma = pair.find(',');
        if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos)
            throw ParseError(std::string(trim(pair)), "expected 'x,y'");
        out.push_back({parse_int(pair.substr(0, comma)), parse_int(pair.substr(comma + 1))});
    }
    return out;
}

std::string format_vertices(std::span<const Vec2> points) {
    std::string s;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i)
            s += ';';
        s += std::to_string(points[i].x);
        s += ',';
        s += std::to_string(points[i].y);
    }
    return s;
}

} // namespace ldp
