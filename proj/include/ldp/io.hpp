#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldp/enumeration.hpp"

namespace ldp {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceReport& report);
SurfaceReport surface_report_from_json(const Json& j);

Json to_json(const FamilyParams& params);
FamilyParams family_params_from_json(const Json& j);

/// Fields, in order: vertices, d, rho, dets, f, singular, family, three_case.
Json to_json(const CatalogEntry& entry);
CatalogEntry catalog_entry_from_json(const Json& j);

Json to_json(const VerificationReport& report);

/// One entry per line.
void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries);

/// Throws std::runtime_error naming the offending line.
std::vector<CatalogEntry> read_catalog(std::istream& in);

/// Aligned plain-text rendering of a report.
std::string format_report(const SurfaceReport& report);

/// Lattice grid, origin marker, polygon outline and one determinant label per
/// edge. Output depends only on the vertex list.
std::string render_svg(const LdpPolygon& q);

/// Throws std::runtime_error on I/O failure.
void emit_svg(const LdpPolygon& q, const std::filesystem::path& path);

} // namespace ldp
