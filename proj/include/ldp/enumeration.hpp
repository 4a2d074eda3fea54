#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldp/equivalence.hpp"
#include "ldp/families.hpp"
#include "ldp/surface.hpp"

namespace ldp {

/// All vertex coordinates lie in [-n, n].
struct BoxSpec {
    Int n = 1;
};

/// One equivalence class of LDP-polygons.
struct CatalogEntry {
    CanonicalForm vertices;
    std::size_t d = 0;
    Int rho = 0;
    std::vector<Int> dets;
    std::vector<Int> f;
    std::size_t singular = 0;
    std::optional<FamilyParams> family;
    std::optional<ThreeCase> three_case;

    /// Canonicalizes and analyzes q; family fields are left empty.
    static CatalogEntry from_polygon(const LdpPolygon& q);

    LdpPolygon polygon() const;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Primitive lattice points of the box in counterclockwise angular order
/// starting at the positive x-axis.
std::vector<Vec2> primitive_points(BoxSpec box);

/// Canonical forms of every LDP-polygon with vertices in the box, sorted.
/// jobs = 0 uses the hardware concurrency.
std::vector<CanonicalForm> enumerate_canonical_forms(BoxSpec box, unsigned jobs = 0);

/// enumerate_canonical_forms followed by analysis; sorted by vertices.
std::vector<CatalogEntry> enumerate_ldp(BoxSpec box, unsigned jobs = 0);

/// Fills family (1-3 singular cones) and three_case (3 singular cones).
void classify_entries(std::span<CatalogEntry> entries);

/// True iff the singular cones of a d = 5 fan sit at positions {1, 3, 5}
/// up to rotation.
bool has_alternating_d5_pattern(const SurfaceReport& report);

/// For every i with sigma_{i-1}, sigma_{i+1} singular and sigma_i
/// nonsingular (d >= 4): det2(v_{i+2}, v_{i-1}) >= 2 and at least three
/// singular cones.
bool half_plane_lemma_holds(const FanCycle& fan, const SurfaceReport& report);

struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples; // vertex text of offending entries
};

struct VerificationReport {
    std::size_t entries = 0;
    std::optional<Int> box;
    std::vector<CheckResult> checks;
    std::string caveat;

    bool passed() const;
    const CheckResult& check(std::string_view name) const;
};

/// Runs the classification and lemma checks over a catalog. Entries are
/// re-analyzed from their vertices; stored fields that disagree are
/// reported under "consistency".
VerificationReport verify_catalog(std::span<const CatalogEntry> entries,
                                  std::optional<Int> box = std::nullopt);

} // namespace ldp
