#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ldp/polygon.hpp"

namespace ldp {

/// Which matrices count as "unimodular". Gl admits determinant -1 as well.
enum class EquivalenceMode { Gl, Sl };

/// Distinguished counterclockwise vertex cycle of an equivalence class.
/// Ordered lexicographically, vertex by vertex.
struct CanonicalForm {
    std::vector<Vec2> vertices;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// A map M with M * vertices(q) == vertices(r) as sets, if one exists.
std::optional<UnimodularMap> are_equivalent(const LdpPolygon& q, const LdpPolygon& r,
                                            EquivalenceMode mode = EquivalenceMode::Gl);

/// For every adjacent vertex pair (w, w') in either reading direction, the
/// map sending w to (1, 0) and w' to (a, delta) with delta > 0 and
/// 0 <= a < delta is unique in the admitted group; the canonical form is the
/// lexicographically least of the resulting counterclockwise vertex lists,
/// each read starting at the image of w.
CanonicalForm canonical_form(const LdpPolygon& q, EquivalenceMode mode = EquivalenceMode::Gl);

/// Applies m to every vertex and restores counterclockwise order (reversing
/// the list when det(m) = -1), keeping the image of the first vertex first.
LdpPolygon transform(const UnimodularMap& m, const LdpPolygon& q);

} // namespace ldp
