#include "ldp/equivalence.hpp"

#include <algorithm>

namespace ldp {

namespace {

std::vector<Vec2> sorted_images(const UnimodularMap& m, std::span<const Vec2> pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (Vec2 p : pts)
        out.push_back(m(p));
    std::sort(out.begin(), out.end());
    return out;
}

/// Extended Euclid: returns (s, t) with s*x + t*y = 1 for primitive (x, y).
std::pair<Int, Int> bezout(Int x, Int y) {
    Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        r0 = checked::sub(r0, checked::mul(q, r1));
        std::swap(r0, r1);
        s0 = checked::sub(s0, checked::mul(q, s1));
        std::swap(s0, s1);
        t0 = checked::sub(t0, checked::mul(q, t1));
        std::swap(t0, t1);
    }
    if (r0 < 0)
        return {checked::neg(s0), checked::neg(t0)};
    return {s0, t0};
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// The map taking `anchor` to (1, 0) and `next` into {(a, delta): 0 <= a < delta}.
/// `reflect` selects the determinant -1 branch, used when `next` precedes
/// `anchor` counterclockwise.
UnimodularMap normalizer(Vec2 anchor, Vec2 next, bool reflect) {
    const auto [s, t] = bezout(anchor.x, anchor.y);
    UnimodularMap m(s, t, checked::neg(anchor.y), anchor.x);
    if (reflect)
        m = UnimodularMap(1, 0, 0, -1) * m;
    const Vec2 image = m(next);
    const Int k = floor_div(image.x, image.y);
    return UnimodularMap(1, checked::neg(k), 0, 1) * m;
}

} // namespace

LdpPolygon transform(const UnimodularMap& m, const LdpPolygon& q) {
    const auto v = q.vertices();
    const std::size_t d = v.size();
    std::vector<Vec2> out;
    out.reserve(d);
    const bool reverse = m.det() < 0;
    for (std::size_t k = 0; k < d; ++k)
        out.push_back(m(v[reverse ? (d - k) % d : k]));
    return validate_ldp_polygon(out);
}

std::optional<UnimodularMap> are_equivalent(const LdpPolygon& q, const LdpPolygon& r,
                                            EquivalenceMode mode) {
    const auto qv = q.vertices();
    const auto rv = r.vertices();
    const std::size_t d = rv.size();
    if (qv.size() != d)
        return std::nullopt;
    if (twice_area(q) != twice_area(r))
        return std::nullopt;

    std::vector<Vec2> target(rv.begin(), rv.end());
    std::sort(target.begin(), target.end());

    for (std::size_t j = 0; j < d; ++j) {
        for (bool reversed : {false, true}) {
            if (reversed && mode == EquivalenceMode::Sl)
                continue;
            const Vec2 w1 = rv[j];
            const Vec2 w2 = rv[reversed ? (j + d - 1) % d : (j + 1) % d];
            auto m = solve_map(qv[0], qv[1], w1, w2);
            if (!m)
                continue;
            if (mode == EquivalenceMode::Sl && m->det() != 1)
                continue;
            if (sorted_images(*m, qv) == target)
                return m;
        }
    }
    return std::nullopt;
}

CanonicalForm canonical_form(const LdpPolygon& q, EquivalenceMode mode) {
    const auto v = q.vertices();
    const std::size_t d = v.size();
    CanonicalForm best;
    std::vector<Vec2> candidate(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (bool reflect : {false, true}) {
            if (reflect && mode == EquivalenceMode::Sl)
                continue;
            const std::size_t step = reflect ? d - 1 : 1;
            const UnimodularMap m = normalizer(v[i], v[(i + step) % d], reflect);
            for (std::size_t k = 0; k < d; ++k)
                candidate[k] = m(v[(i + k * step) % d]);
            if (best.vertices.empty() || candidate < best.vertices)
                best.vertices = candidate;
        }
    }
    return best;
}

} // namespace ldp
