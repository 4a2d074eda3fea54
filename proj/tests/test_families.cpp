#include <doctest.h>

#include <functional>

#include "ldp/enumeration.hpp"
#include "oracles.hpp"

using ldp::FamilyParams;
using ldp::FamilyTag;
using ldp::Int;
using ldp::Vec2;

namespace {

ldp::LdpPolygon poly(std::vector<Vec2> vs) { return ldp::validate_ldp_polygon(vs); }

/// Calls fn on every tuple of `arity` values in [-bound, bound], in
/// lexicographic order, until fn returns true.
bool for_each_tuple(std::size_t arity, Int bound,
                    const std::function<bool(const std::vector<Int>&)>& fn) {
    std::vector<Int> t(arity, -bound);
    for (;;) {
        if (fn(t))
            return true;
        std::size_t k = arity;
        while (k > 0 && t[k - 1] == bound)
            t[--k] = -bound;
        if (k == 0)
            return false;
        ++t[k - 1];
    }
}

FamilyParams from_tuple(FamilyTag tag, const std::vector<Int>& t) {
    FamilyParams fp;
    fp.tag = tag;
    std::optional<Int> FamilyParams::*slots[] = {&FamilyParams::p, &FamilyParams::q,
                                                 &FamilyParams::r, &FamilyParams::s,
                                                 &FamilyParams::t};
    for (std::size_t k = 0; k < t.size(); ++k)
        fp.*slots[k] = t[k];
    return fp;
}

/// Plain parameter sweep: tags in order, tuples in lexicographic order,
/// equivalence tested directly.
std::optional<FamilyParams> identify_by_sweep(const ldp::LdpPolygon& q, Int bound) {
    const auto report = ldp::analyze(q.fan());
    for (FamilyTag tag : ldp::kAllFamilies) {
        if (ldp::family_vertex_count(tag) != q.size() ||
            ldp::family_singular_count(tag) != report.singular_count)
            continue;
        std::optional<FamilyParams> found;
        for_each_tuple(ldp::family_parameter_names(tag).size(), bound, [&](const auto& t) {
            const auto fp = from_tuple(tag, t);
            if (ldp::check_params(fp) && ldp::are_equivalent(ldp::generate(fp).polygon, q))
                found = fp;
            return found.has_value();
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("check_params examples") {
    CHECK(ldp::check_params(FamilyParams::make(FamilyTag::Two1, {2, 3})));
    CHECK_FALSE(ldp::check_params(FamilyParams::make(FamilyTag::Two1, {2, 4})));
    CHECK_FALSE(ldp::check_params(FamilyParams::make(FamilyTag::Two2, {0, 1, -1})));
    CHECK(ldp::check_params(FamilyParams::make(FamilyTag::Three5, {0, 1, -3, 2, -3})));
    CHECK_FALSE(ldp::check_params(FamilyParams::make(FamilyTag::Dais1, {0})));
    CHECK(ldp::check_params(FamilyParams::make(FamilyTag::Dais3, {1})));
}

TEST_CASE("first_violation names the constraint") {
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Two1, {2, 4})) == "gcd(p, q) = 1");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Two1, {1, 3})) == "p >= 2");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Two2, {0, 1, -1})) ==
          "r <= -pq-2");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Two3, {0, 2, -2})) ==
          "q <= -r-1");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Two1, {2})) ==
          "missing parameter q");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Dais1, {1, 2})) ==
          "unexpected parameter q");
    CHECK(ldp::first_violation(FamilyParams::make(FamilyTag::Three5, {0, 1, -3, 2, -1})) ==
          "t <= -2");
    try {
        ldp::generate(FamilyParams::make(FamilyTag::Two2, {0, 1, -1}));
        FAIL("generate accepted invalid parameters");
    } catch (const ldp::InvalidParams& e) {
        CHECK(e.constraint() == "r <= -pq-2");
    }
}

TEST_CASE("generate examples") {
    const auto d1 = ldp::generate(FamilyParams::make(FamilyTag::Dais1, {1}));
    CHECK(ldp::format_vertices(d1.polygon.vertices()) == "1,-1;1,1;-1,0");
    const auto r1 = ldp::analyze(d1.polygon.fan());
    CHECK(r1.dets() == std::vector<Int>{2, 1, 1});
    CHECK(r1.singular_count == 1);

    const auto t3 = ldp::generate(FamilyParams::make(FamilyTag::Two3, {0, 1, -2}));
    CHECK(ldp::format_vertices(t3.polygon.vertices()) == "1,0;0,1;-1,1;-1,0;1,-2");
    const auto r3 = ldp::analyze(t3.polygon.fan());
    CHECK(r3.dets() == std::vector<Int>{1, 1, 1, 2, 2});
    CHECK(r3.f_values == std::vector<Int>{2, 1, 1, 2, 4});
    CHECK(r3.singular_count == 2);

    const auto t5 = ldp::generate(FamilyParams::make(FamilyTag::Three5, {0, 1, -3, 2, -3}));
    CHECK(ldp::format_vertices(t5.polygon.vertices()) == "1,0;0,1;-1,0;1,-3;2,-3");
    CHECK(ldp::analyze(t5.polygon.fan()).singular_count == 3);

    CHECK(ldp::format_vertices(
              ldp::generate(FamilyParams::make(FamilyTag::Two1, {2, 3})).polygon.vertices()) ==
          "1,0;0,1;-2,-3");
    CHECK(ldp::format_vertices(
              ldp::generate(FamilyParams::make(FamilyTag::Dais3, {2})).polygon.vertices()) ==
          "1,-1;2,1;1,1;-1,0;0,-1");
}

TEST_CASE("FamilyParams text") {
    CHECK(FamilyParams::make(FamilyTag::Two1, {2, 3}).to_string() == "two1 p=2 q=3");
    for (FamilyTag tag : ldp::kAllFamilies)
        CHECK(ldp::parse_family_tag(ldp::to_string(tag)) == tag);
    CHECK_FALSE(ldp::parse_family_tag("four"));
}

TEST_CASE("identify examples") {
    CHECK(ldp::identify(poly({{1, 0}, {0, 1}, {-2, -3}})) ==
          FamilyParams::make(FamilyTag::Two1, {2, 3}));
    CHECK(ldp::identify(poly({{1, 0}, {0, 1}, {-1, -2}})) ==
          FamilyParams::make(FamilyTag::Dais1, {1}));
    CHECK_FALSE(ldp::identify(poly({{1, 0}, {0, 1}, {-1, -1}})));
    // The pentagon is reached by two tuples; the lexicographically smaller wins.
    const auto pentagon = poly({{1, 0}, {0, 1}, {-1, 0}, {1, -3}, {2, -3}});
    CHECK(ldp::family_matches(pentagon, FamilyTag::Three5) ==
          std::vector<FamilyParams>{FamilyParams::make(FamilyTag::Three5, {0, -2, -3, -1, -3}),
                                    FamilyParams::make(FamilyTag::Three5, {0, 1, -3, 2, -3})});
    CHECK(ldp::identify(pentagon) ==
          FamilyParams::make(FamilyTag::Three5, {0, -2, -3, -1, -3}));
}

TEST_CASE("classify_three examples") {
    CHECK(ldp::classify_three(poly({{2, -1}, {-1, 2}, {-1, -1}})) ==
          ldp::ThreeCase::PicardLeTwo);
    const auto pentagon = poly({{1, 0}, {0, 1}, {-1, 0}, {1, -3}, {2, -3}});
    CHECK(ldp::classify_three(pentagon) == ldp::ThreeCase::FamilyD5);

    // Blowing up the first cone breaks convexity at (1,0); the second works.
    CHECK_FALSE(ldp::analyze(ldp::blow_up(pentagon.fan(), 1)).is_log_del_pezzo);
    const auto up = ldp::blow_up(pentagon.fan(), 2);
    CHECK(ldp::format_vertices(up.rays()) == "1,0;0,1;-1,1;-1,0;1,-3;2,-3");
    CHECK(ldp::classify_three(ldp::validate_ldp_polygon(up.rays())) ==
          ldp::ThreeCase::BlowupOfPicard3);

    CHECK_THROWS_AS(ldp::classify_three(poly({{1, 0}, {0, 1}, {-1, -1}})), ldp::ContractError);
    for (auto c : {ldp::ThreeCase::PicardLeTwo, ldp::ThreeCase::FamilyD5,
                   ldp::ThreeCase::BlowupOfPicard3, ldp::ThreeCase::None})
        CHECK(ldp::parse_three_case(ldp::to_string(c)) == c);
}

TEST_CASE("soundness sweep: valid parameters give LDP polygons with the promised count") {
    const Int bound = 6;
    for (FamilyTag tag : ldp::kAllFamilies) {
        std::size_t valid = 0;
        for_each_tuple(ldp::family_parameter_names(tag).size(), bound, [&](const auto& t) {
            const auto fp = from_tuple(tag, t);
            if (!ldp::check_params(fp))
                return false;
            ++valid;
            const auto inst = ldp::generate(fp);
            const auto r = ldp::analyze(inst.polygon.fan());
            CHECK(r.is_log_del_pezzo);
            CHECK(r.singular_count == ldp::family_singular_count(tag));
            CHECK(r.d == ldp::family_vertex_count(tag));
            if (tag == FamilyTag::Two2)
                CHECK(r.picard_number == 2);
            if (tag == FamilyTag::Two3)
                CHECK(r.picard_number == 3);
            return false;
        });
        CHECK(valid > 0);
    }
}

TEST_CASE("generate then identify returns an equivalent family member") {
    for (FamilyTag tag : ldp::kAllFamilies)
        for_each_tuple(ldp::family_parameter_names(tag).size(), 4, [&](const auto& t) {
            const auto fp = from_tuple(tag, t);
            if (!ldp::check_params(fp))
                return false;
            const auto q = ldp::generate(fp).polygon;
            const auto found = ldp::identify(q);
            REQUIRE(found);
            CHECK(found->tag == tag);
            CHECK(ldp::are_equivalent(ldp::generate(*found).polygon, q));
            CHECK(ldp::family_matches(q, tag).size() >= 1);
            return false;
        });
}

TEST_CASE("identify agrees with a plain parameter sweep") {
    const auto catalog = ldp::enumerate_ldp({2});
    std::size_t compared = 0;
    for (const auto& e : catalog) {
        if (e.singular < 1 || e.singular > 3)
            continue;
        const auto q = e.polygon();
        const Int bound = std::min<Int>(ldp::twice_area(q), e.singular == 3 ? 5 : 12);
        CHECK_MESSAGE(ldp::identify(q, bound) == identify_by_sweep(q, bound),
                      ldp::format_vertices(q.vertices()));
        ++compared;
    }
    CHECK(compared > 30);
}

TEST_CASE("no family match lies only beyond the twice-area bound") {
    const auto catalog = ldp::enumerate_ldp({3});
    for (const auto& e : catalog) {
        if (e.singular < 1 || e.singular > 3)
            continue;
        const auto q = e.polygon();
        const Int b = ldp::twice_area(q);
        CHECK(ldp::identify(q, b) == ldp::identify(q, 2 * b));
        bool any = false;
        for (FamilyTag tag : ldp::kAllFamilies)
            any = any || !ldp::family_matches(q, tag).empty();
        CHECK(any == ldp::identify(q, b).has_value());
    }
}
