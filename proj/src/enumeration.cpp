#include "ldp/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace ldp {

CatalogEntry CatalogEntry::from_polygon(const LdpPolygon& q) {
    CatalogEntry e;
    e.vertices = canonical_form(q);
    // Cone data is read off the canonical representative so that stored lists
    // line up with the stored vertices.
    const SurfaceReport r = analyze(validate_fan(e.vertices.vertices));
    e.d = r.d;
    e.rho = r.picard_number;
    e.dets = r.dets();
    e.f = r.f_values;
    e.singular = r.singular_count;
    return e;
}

LdpPolygon CatalogEntry::polygon() const { return validate_ldp_polygon(vertices.vertices); }

std::vector<Vec2> primitive_points(BoxSpec box) {
    if (box.n < 1)
        throw ContractError("box size must be at least 1");
    std::vector<Vec2> pts;
    for (Int x = -box.n; x <= box.n; ++x)
        for (Int y = -box.n; y <= box.n; ++y)
            if (is_primitive({x, y}))
                pts.push_back({x, y});
    std::sort(pts.begin(), pts.end(), angle_less);
    return pts;
}

namespace {

/// Depth-first search over convex chains whose first vertex has the smallest
/// angle. Vertices are appended in increasing angular order, so the chain
/// winds at most once and closing it yields each polygon exactly once.
class ShardSearch {
public:
    ShardSearch(std::span<const Vec2> points, std::set<CanonicalForm>& sink)
        : points_(points), sink_(sink) {}

    void run(std::size_t start) {
        chain_.assign(1, points_[start]);
        extend(start);
    }

private:
    void extend(std::size_t last_index) {
        const Vec2 first = chain_.front();
        const Vec2 cur = chain_.back();
        for (std::size_t j = last_index + 1; j < points_.size(); ++j) {
            const Vec2 w = points_[j];
            // Later points are at least a half-turn away from cur.
            if (det2(cur, w) <= 0)
                break;
            if (chain_.size() >= 2) {
                const Vec2 prev = chain_[chain_.size() - 2];
                if (det2(cur - prev, w - cur) <= 0)
                    continue;
                if (det2(w - cur, first - cur) <= 0)
                    continue;
            }
            chain_.push_back(w);
            if (chain_.size() >= 3 && closes())
                record();
            extend(j);
            chain_.pop_back();
        }
    }

    bool closes() const {
        const Vec2 first = chain_.front(), second = chain_[1];
        const Vec2 last = chain_.back(), prev = chain_[chain_.size() - 2];
        return det2(last, first) >= 1 && det2(last - prev, first - last) > 0 &&
               det2(first - last, second - first) > 0;
    }

    void record() {
        const LdpPolygon q = validate_ldp_polygon(chain_);
        if (!analyze(q.fan()).is_log_del_pezzo)
            throw std::logic_error("convex polygon failed the log del Pezzo criterion: " +
                                   format_vertices(chain_));
        sink_.insert(canonical_form(q));
    }

    std::span<const Vec2> points_;
    std::set<CanonicalForm>& sink_;
    std::vector<Vec2> chain_;
};

} // namespace

std::vector<CanonicalForm> enumerate_canonical_forms(BoxSpec box, unsigned jobs) {
    const std::vector<Vec2> points = primitive_points(box);
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, points.size()));

    std::vector<std::set<CanonicalForm>> partial(jobs);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned w) {
        try {
            ShardSearch search(points, partial[w]);
            for (std::size_t s = next++; s < points.size(); s = next++)
                search.run(s);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> threads;
        for (unsigned w = 1; w < jobs; ++w)
            threads.emplace_back(worker, w);
        worker(0);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::set<CanonicalForm> merged;
    for (auto& part : partial)
        merged.merge(part);
    return {merged.begin(), merged.end()};
}

std::vector<CatalogEntry> enumerate_ldp(BoxSpec box, unsigned jobs) {
    std::vector<CatalogEntry> out;
    for (const auto& form : enumerate_canonical_forms(box, jobs))
        out.push_back(CatalogEntry::from_polygon(validate_ldp_polygon(form.vertices)));
    return out;
}

void classify_entries(std::span<CatalogEntry> entries) {
    for (auto& e : entries) {
        e.family.reset();
        e.three_case.reset();
        if (e.singular < 1 || e.singular > 3)
            continue;
        const LdpPolygon q = e.polygon();
        e.family = identify(q);
        if (e.singular == 3)
            e.three_case = classify_three(q);
    }
}

bool has_alternating_d5_pattern(const SurfaceReport& report) {
    if (report.d != 5 || report.singular_count != 3)
        return false;
    for (std::size_t shift = 0; shift < 5; ++shift) {
        bool match = true;
        for (std::size_t k = 0; k < 5 && match; ++k)
            match = report.cones[(k + shift) % 5].singular == (k % 2 == 0);
        if (match)
            return true;
    }
    return false;
}

bool half_plane_lemma_holds(const FanCycle& fan, const SurfaceReport& report) {
    const std::size_t d = report.d;
    if (d < 4)
        return true;
    for (std::size_t i = 1; i <= d; ++i) {
        const auto k = static_cast<std::ptrdiff_t>(i);
        const bool before = report.cones[(i + d - 2) % d].singular; // sigma_{i-1}
        const bool here = report.cones[i - 1].singular;             // sigma_i
        const bool after = report.cones[i % d].singular;            // sigma_{i+1}
        if (!before || here || !after)
            continue;
        if (det2(fan.ray(k + 2), fan.ray(k - 1)) < 2 || report.singular_count < 3)
            return false;
    }
    return true;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.counterexamples.empty(); });
}

const CheckResult& VerificationReport::check(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw std::out_of_range("no check named " + std::string(name));
}

VerificationReport verify_catalog(std::span<const CatalogEntry> entries, std::optional<Int> box) {
    VerificationReport rep;
    rep.entries = entries.size();
    rep.box = box;
    rep.caveat = "Classes whose every representative needs a coordinate outside the box are "
                 "absent; each check is a no-counterexample-in-box statement.";

    CheckResult consistency{"consistency", 0, {}};
    CheckResult one{"one_singular_dais_family", 0, {}};
    CheckResult two{"two_singular_families", 0, {}};
    CheckResult three{"three_singular_cases", 0, {}};
    CheckResult alternating{"no_alternating_d5", 0, {}};
    CheckResult contiguity{"singular_arc_contiguous", 0, {}};
    CheckResult lemma{"half_plane_lemma", 0, {}};

    auto is_dais = [](const std::optional<FamilyParams>& fp) {
        return fp && family_singular_count(fp->tag) == 1;
    };
    auto is_two = [](const std::optional<FamilyParams>& fp) {
        return fp && family_singular_count(fp->tag) == 2;
    };

    for (const auto& e : entries) {
        const std::string label = format_vertices(e.vertices.vertices);
        ++consistency.checked;
        std::optional<LdpPolygon> q;
        try {
            q = e.polygon();
        } catch (const std::exception&) {
            consistency.counterexamples.push_back(label);
            continue;
        }
        const SurfaceReport r = analyze(q->fan());
        if (!r.is_log_del_pezzo || canonical_form(*q) != e.vertices || e.d != r.d ||
            e.rho != r.picard_number || e.dets != r.dets() || e.f != r.f_values ||
            e.singular != r.singular_count) {
            consistency.counterexamples.push_back(label);
            continue;
        }
        if (e.family && (!check_params(*e.family) ||
                         !are_equivalent(generate(*e.family).polygon, *q)))
            consistency.counterexamples.push_back(label);

        if (r.singular_count == 1) {
            ++one.checked;
            if (!is_dais(identify(*q)))
                one.counterexamples.push_back(label);
        } else if (r.singular_count == 2) {
            ++two.checked;
            if (!is_two(identify(*q)) || r.d > 5)
                two.counterexamples.push_back(label);
        } else if (r.singular_count == 3) {
            ++three.checked;
            const ThreeCase c = classify_three(*q);
            if (c == ThreeCase::None || r.d > 6)
                three.counterexamples.push_back(label);
        }

        if (r.d == 5) {
            ++alternating.checked;
            if (has_alternating_d5_pattern(r))
                alternating.counterexamples.push_back(label);
        }

        ++contiguity.checked;
        if (!nonsingular_arc_contiguous(r))
            contiguity.counterexamples.push_back(label);

        ++lemma.checked;
        if (!half_plane_lemma_holds(q->fan(), r))
            lemma.counterexamples.push_back(label);
    }

    rep.checks = {one, two, three, alternating, contiguity, lemma, consistency};
    return rep;
}

} // namespace ldp
