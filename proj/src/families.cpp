#include "ldp/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>

#include "ldp/surface.hpp"

namespace ldp {

namespace {

using namespace checked;

struct Constraint {
    const char* name;
    bool holds;
};

/// Anchored reading of a family template: (anchor, next) is a parameter-free
/// adjacent vertex pair, and `extract` recovers the parameters from the
/// counterclockwise cycle starting at the anchor.
struct Anchor {
    Vec2 anchor;
    Vec2 next;
    std::function<FamilyParams(std::span<const Vec2>)> extract;
};

Anchor anchor_for(FamilyTag tag) {
    using T = FamilyTag;
    switch (tag) {
    case T::Dais1:
    case T::Dais2:
        // (-1,0), (1,-1), (p,1), ...
        return {{-1, 0}, {1, -1}, [tag](auto c) { return FamilyParams::make(tag, {c[2].x}); }};
    case T::Dais3:
        // (0,-1), (1,-1), (p,1), (p-1,1), (-1,0)
        return {{0, -1}, {1, -1}, [](auto c) { return FamilyParams::make(T::Dais3, {c[2].x}); }};
    case T::Two1:
        return {{1, 0}, {0, 1}, [](auto c) {
                    return FamilyParams::make(T::Two1, {neg(c[2].x), neg(c[2].y)});
                }};
    case T::Two2:
        return {{1, 0}, {0, 1}, [](auto c) {
                    return FamilyParams::make(T::Two2, {c[2].y, c[3].x, c[3].y});
                }};
    case T::Two3:
        return {{1, 0}, {0, 1}, [](auto c) {
                    return FamilyParams::make(T::Two3, {c[3].y, c[4].x, c[4].y});
                }};
    case T::Three5:
        return {{1, 0}, {0, 1}, [](auto c) {
                    return FamilyParams::make(T::Three5, {c[2].y, c[3].x, c[3].y, c[4].x, c[4].y});
                }};
    }
    throw ContractError("unknown family tag");
}

std::vector<Vec2> template_vertices(const FamilyParams& fp) {
    using T = FamilyTag;
    const Int p = *fp.p;
    switch (fp.tag) {
    case T::Dais1: return {{1, -1}, {p, 1}, {-1, 0}};
    case T::Dais2: return {{1, -1}, {p, 1}, {sub(p, 1), 1}, {-1, 0}};
    case T::Dais3: return {{1, -1}, {p, 1}, {sub(p, 1), 1}, {-1, 0}, {0, -1}};
    case T::Two1: return {{1, 0}, {0, 1}, {neg(p), neg(*fp.q)}};
    case T::Two2: return {{1, 0}, {0, 1}, {-1, p}, {*fp.q, *fp.r}};
    case T::Two3: return {{1, 0}, {0, 1}, {-1, add(p, 1)}, {-1, p}, {*fp.q, *fp.r}};
    case T::Three5: return {{1, 0}, {0, 1}, {-1, p}, {*fp.q, *fp.r}, {*fp.s, *fp.t}};
    }
    throw ContractError("unknown family tag");
}

std::optional<Int> FamilyParams::*const kSlots[] = {&FamilyParams::p, &FamilyParams::q,
                                                    &FamilyParams::r, &FamilyParams::s,
                                                    &FamilyParams::t};

std::vector<Constraint> constraints(const FamilyParams& fp) {
    using T = FamilyTag;
    const Int p = *fp.p;
    switch (fp.tag) {
    case T::Dais1:
    case T::Dais2:
    case T::Dais3: return {{"p >= 1", p >= 1}};
    case T::Two1: {
        const Int q = *fp.q;
        return {{"p >= 2", p >= 2}, {"q >= 2", q >= 2}, {"gcd(p, q) = 1", gcd(p, q) == 1}};
    }
    case T::Two2: {
        const Int q = *fp.q, r = *fp.r, pq = mul(p, q);
        return {{"p <= 1", p <= 1},
                {"r <= -pq-2", r <= sub(neg(pq), 2)},
                {"r <= -2", r <= -2},
                {"r <= -q-1", r <= sub(neg(q), 1)},
                {"r <= q-pq-1", r <= sub(sub(q, pq), 1)},
                {"gcd(q, r) = 1", gcd(q, r) == 1}};
    }
    case T::Two3: {
        const Int q = *fp.q, r = *fp.r;
        return {{"p <= 0", p <= 0},
                {"1 <= q", 1 <= q},
                {"q <= -r-1", q <= sub(neg(r), 1)},
                {"gcd(q, r) = 1", gcd(q, r) == 1}};
    }
    case T::Three5: {
        const Int q = *fp.q, r = *fp.r, s = *fp.s, t = *fp.t;
        const Int pq = mul(p, q);
        const Int qt_rs = sub(mul(q, t), mul(r, s));
        const Int r_bound4 = sub(add(add(add(neg(pq), qt_rs), mul(p, s)), t), 1);
        return {{"p <= 1", p <= 1},
                {"r <= -1", r <= -1},
                {"r <= -pq-2", r <= sub(neg(pq), 2)},
                {"r <= q-pq-1", r <= sub(sub(q, pq), 1)},
                {"r <= -pq+qt-rs+ps+t-1", r <= r_bound4},
                {"t <= -2", t <= -2},
                {"t <= -s-1", t <= sub(neg(s), 1)},
                {"t <= qt-rs+r-1", t <= sub(add(qt_rs, r), 1)},
                {"2 <= qt-rs", 2 <= qt_rs},
                {"gcd(q, r) = 1", gcd(q, r) == 1},
                {"gcd(s, t) = 1", gcd(s, t) == 1}};
    }
    }
    throw ContractError("unknown family tag");
}

Int max_abs_param(const FamilyParams& fp) {
    Int m = 0;
    for (auto slot : kSlots)
        if (fp.*slot)
            m = std::max(m, std::abs(*(fp.*slot)));
    return m;
}

} // namespace

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Dais1: return "dais1";
    case FamilyTag::Dais2: return "dais2";
    case FamilyTag::Dais3: return "dais3";
    case FamilyTag::Two1: return "two1";
    case FamilyTag::Two2: return "two2";
    case FamilyTag::Two3: return "two3";
    case FamilyTag::Three5: return "three5";
    }
    return "?";
}

std::optional<FamilyTag> parse_family_tag(std::string_view name) {
    for (FamilyTag tag : kAllFamilies)
        if (to_string(tag) == name)
            return tag;
    return std::nullopt;
}

std::size_t family_singular_count(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Dais1:
    case FamilyTag::Dais2:
    case FamilyTag::Dais3: return 1;
    case FamilyTag::Two1:
    case FamilyTag::Two2:
    case FamilyTag::Two3: return 2;
    case FamilyTag::Three5: return 3;
    }
    return 0;
}

std::size_t family_vertex_count(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Dais1:
    case FamilyTag::Two1: return 3;
    case FamilyTag::Dais2:
    case FamilyTag::Two2: return 4;
    case FamilyTag::Dais3:
    case FamilyTag::Two3:
    case FamilyTag::Three5: return 5;
    }
    return 0;
}

std::vector<std::string_view> family_parameter_names(FamilyTag tag) {
    static constexpr std::array<std::string_view, 5> names{"p", "q", "r", "s", "t"};
    std::size_t n = 1;
    switch (tag) {
    case FamilyTag::Dais1:
    case FamilyTag::Dais2:
    case FamilyTag::Dais3: n = 1; break;
    case FamilyTag::Two1: n = 2; break;
    case FamilyTag::Two2:
    case FamilyTag::Two3: n = 3; break;
    case FamilyTag::Three5: n = 5; break;
    }
    return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n)};
}

FamilyParams FamilyParams::make(FamilyTag tag, std::initializer_list<Int> values) {
    if (values.size() > 5)
        throw ContractError("at most five family parameters");
    FamilyParams fp;
    fp.tag = tag;
    std::size_t k = 0;
    for (Int v : values)
        fp.*kSlots[k++] = v;
    return fp;
}

std::string FamilyParams::to_string() const {
    std::string s(ldp::to_string(tag));
    const char* names = "pqrst";
    for (std::size_t k = 0; k < 5; ++k)
        if (this->*kSlots[k])
            s += std::string(" ") + names[k] + "=" + std::to_string(*(this->*kSlots[k]));
    return s;
}

InvalidParams::InvalidParams(std::string constraint)
    : std::invalid_argument("invalid family parameters: " + constraint),
      constraint_(std::move(constraint)) {}

std::optional<std::string> first_violation(const FamilyParams& params) {
    const std::size_t wanted = family_parameter_names(params.tag).size();
    const char* names = "pqrst";
    for (std::size_t k = 0; k < 5; ++k) {
        const bool present = static_cast<bool>(params.*kSlots[k]);
        if (k < wanted && !present)
            return std::string("missing parameter ") + names[k];
        if (k >= wanted && present)
            return std::string("unexpected parameter ") + names[k];
    }
    for (const auto& c : constraints(params))
        if (!c.holds)
            return std::string(c.name);
    return std::nullopt;
}

FamilyInstance generate(const FamilyParams& params) {
    if (auto bad = first_violation(params))
        throw InvalidParams(*bad);
    const auto vertices = template_vertices(params);
    return {params, validate_ldp_polygon(vertices)};
}

std::vector<FamilyParams> family_matches(const LdpPolygon& q, FamilyTag tag) {
    std::vector<FamilyParams> out;
    const auto v = q.vertices();
    const std::size_t d = v.size();
    if (d != family_vertex_count(tag))
        return out;

    const Anchor a = anchor_for(tag);
    std::vector<Vec2> cycle(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t step : {std::size_t{1}, d - 1}) {
            const auto m = solve_map(v[i], v[(i + step) % d], a.anchor, a.next);
            if (!m)
                continue;
            for (std::size_t k = 0; k < d; ++k)
                cycle[k] = (*m)(v[(i + k * step) % d]);
            const FamilyParams fp = a.extract(cycle);
            if (!check_params(fp))
                continue;
            if (same_cycle(generate(fp).polygon.vertices(), cycle))
                out.push_back(fp);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<FamilyParams> identify(const LdpPolygon& q, Int bound) {
    for (FamilyTag tag : kAllFamilies) {
        for (const auto& fp : family_matches(q, tag))
            if (max_abs_param(fp) <= bound)
                return fp;
    }
    return std::nullopt;
}

std::optional<FamilyParams> identify(const LdpPolygon& q) { return identify(q, twice_area(q)); }

std::string_view to_string(ThreeCase c) {
    switch (c) {
    case ThreeCase::PicardLeTwo: return "picard_le_two";
    case ThreeCase::FamilyD5: return "family_d5";
    case ThreeCase::BlowupOfPicard3: return "blowup_of_picard3";
    case ThreeCase::None: return "none";
    }
    return "?";
}

std::optional<ThreeCase> parse_three_case(std::string_view name) {
    for (ThreeCase c : {ThreeCase::PicardLeTwo, ThreeCase::FamilyD5, ThreeCase::BlowupOfPicard3,
                        ThreeCase::None})
        if (to_string(c) == name)
            return c;
    return std::nullopt;
}

ThreeCase classify_three(const LdpPolygon& q) {
    const SurfaceReport report = analyze(q.fan());
    if (!report.is_log_del_pezzo || report.singular_count != 3)
        throw ContractError("classify_three: expected a log del Pezzo polygon with three "
                            "singular cones");
    const std::size_t d = report.d;
    if (d <= 4)
        return ThreeCase::PicardLeTwo;
    if (d == 5) {
        const auto fp = identify(q);
        return fp && fp->tag == FamilyTag::Three5 ? ThreeCase::FamilyD5 : ThreeCase::None;
    }
    if (d == 6) {
        for (std::size_t i : blow_down_candidates(q.fan())) {
            const SurfaceReport smaller = analyze(blow_down(q.fan(), i));
            if (smaller.is_log_del_pezzo && smaller.d == 5 && smaller.singular_count == 3)
                return ThreeCase::BlowupOfPicard3;
        }
    }
    return ThreeCase::None;
}

} // namespace ldp
