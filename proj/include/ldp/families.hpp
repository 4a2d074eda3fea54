#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldp/polygon.hpp"

namespace ldp {

/// The parametric families of the one-, two- and three-singular-point
/// classifications. dais1..3 have one singular point, two1..3 two, three5 three.
enum class FamilyTag { Dais1, Dais2, Dais3, Two1, Two2, Two3, Three5 };

inline constexpr FamilyTag kAllFamilies[] = {FamilyTag::Dais1, FamilyTag::Dais2, FamilyTag::Dais3,
                                             FamilyTag::Two1,  FamilyTag::Two2,  FamilyTag::Two3,
                                             FamilyTag::Three5};

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> parse_family_tag(std::string_view name);

/// Number of singular points every member of the family has.
std::size_t family_singular_count(FamilyTag tag);

/// Number of vertices of every member.
std::size_t family_vertex_count(FamilyTag tag);

/// Names of the parameters the tag demands, in order ("p", "q", ...).
std::vector<std::string_view> family_parameter_names(FamilyTag tag);

struct FamilyParams {
    FamilyTag tag = FamilyTag::Dais1;
    std::optional<Int> p, q, r, s, t;

    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

    /// Fills p, q, r, s, t from `values` in that order.
    static FamilyParams make(FamilyTag tag, std::initializer_list<Int> values);

    /// "two1 p=2 q=3"
    std::string to_string() const;
};

/// The generated polygon's parameters fail the family's constraint system.
class InvalidParams : public std::invalid_argument {
public:
    explicit InvalidParams(std::string constraint);
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

/// Name of the first violated constraint (missing/extra parameters included),
/// or empty if the full constraint system holds.
std::optional<std::string> first_violation(const FamilyParams& params);

inline bool check_params(const FamilyParams& params) { return !first_violation(params); }

struct FamilyInstance {
    FamilyParams params;
    LdpPolygon polygon;
};

/// Throws InvalidParams naming the first violated constraint.
FamilyInstance generate(const FamilyParams& params);

/// Every parameter tuple of `tag` whose generated polygon is equivalent to q
/// (finitely many: one candidate per anchored adjacent vertex pair), sorted.
std::vector<FamilyParams> family_matches(const LdpPolygon& q, FamilyTag tag);

/// First matching family in tag order, lexicographically least parameters,
/// restricted to |parameter| <= bound.
std::optional<FamilyParams> identify(const LdpPolygon& q, Int bound);

/// identify with bound = twice_area(q).
std::optional<FamilyParams> identify(const LdpPolygon& q);

enum class ThreeCase { PicardLeTwo, FamilyD5, BlowupOfPicard3, None };

std::string_view to_string(ThreeCase c);
std::optional<ThreeCase> parse_three_case(std::string_view name);

/// Case split for log del Pezzo polygons with exactly three singular cones.
/// Throws ContractError on other input.
ThreeCase classify_three(const LdpPolygon& q);

} // namespace ldp
