// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        out.ok = false;
        out.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
    }
    failures += !out.ok;
    std::printf("[%s] %2d %-52s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                out.detail.c_str());
    std::fflush(stdout);
}

std::string n(std::size_t v) { return std::to_string(v); }

} // namespace

int main() {
    std::vector<ldp::CatalogEntry> box3;
    ldp::VerificationReport report3;

    run(1, "five smooth classes in [-1,1]^2", 10, [] {
        const auto entries = ldp::enumerate_ldp({1});
        std::size_t smooth = 0;
        for (const auto& e : entries)
            smooth += e.singular == 0;
        return Outcome{smooth == 5, n(smooth) + " nonsingular of " + n(entries.size())};
    });

    run(2, "DFS enumeration equals subset oracle", 60, [] {
        Outcome out{true, ""};
        for (ldp::Int box : {1, 2}) {
            const auto dfs = ldp::enumerate_canonical_forms({box});
            const auto brute = oracle::brute_force_classes(box);
            const bool same = std::set<ldp::CanonicalForm>(dfs.begin(), dfs.end()) == brute;
            out.ok = out.ok && same;
            out.detail += "n=" + std::to_string(box) + ": " + n(dfs.size()) + " vs " +
                          n(brute.size()) + "  ";
        }
        return out;
    });

    run(3, "one singular point: all match a dais family", 120, [&] {
        box3 = ldp::enumerate_ldp({3});
        ldp::classify_entries(box3);
        report3 = ldp::verify_catalog(box3, 3);
        const auto& c = report3.check("one_singular_dais_family");
        return Outcome{c.counterexamples.empty() && c.checked > 0 &&
                           report3.check("consistency").counterexamples.empty(),
                       n(box3.size()) + " classes, " + n(c.checked) + " checked, " +
                           n(c.counterexamples.size()) + " unmatched"};
    });

    run(4, "two singular points: two1/two2/two3, d <= 5", 0, [&] {
        const auto& c = report3.check("two_singular_families");
        return Outcome{c.counterexamples.empty() && c.checked > 0,
                       n(c.checked) + " checked, " + n(c.counterexamples.size()) +
                           " counterexamples"};
    });

    run(5, "three singular points: case split, d <= 6", 0, [&] {
        const auto& c = report3.check("three_singular_cases");
        std::size_t cases[4] = {};
        for (const auto& e : box3)
            if (e.three_case)
                ++cases[static_cast<int>(*e.three_case)];
        return Outcome{c.counterexamples.empty() && c.checked > 0 && cases[3] == 0,
                       n(c.checked) + " checked (" + n(cases[0]) + "/" + n(cases[1]) + "/" +
                           n(cases[2]) + "), " + n(c.counterexamples.size()) +
                           " counterexamples"};
    });

    run(6, "no alternating singular pattern at d = 5", 0, [&] {
        std::size_t checked = 0, bad = 0;
        for (ldp::Int box : {1, 2}) {
            for (const auto& e : ldp::enumerate_ldp({box})) {
                const auto r = ldp::analyze(e.polygon().fan());
                checked += r.d == 5;
                bad += ldp::has_alternating_d5_pattern(r);
            }
        }
        const auto& c = report3.check("no_alternating_d5");
        checked += c.checked;
        bad += c.counterexamples.size();
        return Outcome{bad == 0 && c.checked > 0,
                       n(checked) + " d=5 entries over n=1..3, " + n(bad) + " alternating"};
    });

    run(7, "singular cones contiguous; alternating fan not LDP", 0, [&] {
        const auto& c = report3.check("singular_arc_contiguous");
        const auto fan = ldp::validate_fan(
            std::vector<ldp::Vec2>{{1, 0}, {0, 1}, {-2, -1}, {-3, -2}});
        const auto r = ldp::analyze(fan);
        const bool rejected = !r.is_log_del_pezzo && ldp::f_value(fan, 3) == 0;
        return Outcome{c.counterexamples.empty() && c.checked == box3.size() && rejected,
                       n(c.checked) + " contiguous of " + n(box3.size()) +
                           ", f(3) = " + std::to_string(ldp::f_value(fan, 3))};
    });

    run(8, "f-criterion agrees with degree signs", 0, [] {
        std::mt19937_64 rng(8);
        std::size_t mismatches = 0, ldp_fans = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const auto fan = oracle::random_fan(rng, 8, 20);
            const auto r = ldp::analyze(fan);
            bool min_f = true, degrees = true;
            for (std::size_t i = 1; i <= r.d; ++i) {
                min_f = min_f && r.f_values[i - 1] >= 1;
                degrees = degrees && r.anticanonical_degrees[i - 1].sign() > 0;
                mismatches += r.anticanonical_degrees[i - 1] != oracle::degree_by_sum(fan, i);
            }
            mismatches += min_f != degrees || min_f != r.is_log_del_pezzo;
            ldp_fans += min_f;
        }
        return Outcome{mismatches == 0, "10000 fans (" + n(ldp_fans) + " LDP), " +
                                            n(mismatches) + " mismatches"};
    });

    run(9, "family soundness sweep, |parameters| <= 8", 0, [] {
        constexpr ldp::Int bound = 8;
        std::size_t valid = 0, bad = 0;
        std::optional<ldp::Int> ldp::FamilyParams::*slots[] = {
            &ldp::FamilyParams::p, &ldp::FamilyParams::q, &ldp::FamilyParams::r,
            &ldp::FamilyParams::s, &ldp::FamilyParams::t};
        for (auto tag : ldp::kAllFamilies) {
            const std::size_t arity = ldp::family_parameter_names(tag).size();
            std::vector<ldp::Int> t(arity, -bound);
            for (bool more = true; more;) {
                ldp::FamilyParams fp;
                fp.tag = tag;
                for (std::size_t k = 0; k < arity; ++k)
                    fp.*slots[k] = t[k];
                if (ldp::check_params(fp)) {
                    ++valid;
                    try {
                        const auto r = ldp::analyze(ldp::generate(fp).polygon.fan());
                        bad += !r.is_log_del_pezzo ||
                               r.singular_count != ldp::family_singular_count(tag);
                    } catch (const std::exception&) {
                        ++bad;
                    }
                }
                std::size_t k = arity;
                while (k > 0 && t[k - 1] == bound)
                    t[--k] = -bound;
                more = k > 0;
                if (more)
                    ++t[k - 1];
            }
        }
        return Outcome{bad == 0 && valid > 0,
                       n(valid) + " valid tuples, " + n(bad) + " failures"};
    });

    run(10, "canonical form invariant under 100 maps", 0, [] {
        std::mt19937_64 rng(10);
        const auto entries = ldp::enumerate_ldp({2});
        std::size_t mismatches = 0;
        for (const auto& e : entries) {
            const auto q = e.polygon();
            for (int k = 0; k < 100; ++k)
                mismatches +=
                    ldp::canonical_form(ldp::transform(oracle::random_unimodular(rng), q)) !=
                    e.vertices;
        }
        return Outcome{mismatches == 0, n(entries.size()) + " entries x 100 maps, " +
                                            n(mismatches) + " mismatches"};
    });

    run(11, "blow-up keeps singular count, blow-down inverts", 0, [] {
        std::mt19937_64 rng(11);
        std::size_t done = 0, bad = 0;
        while (done < 1000) {
            const auto fan = oracle::random_ldp_polygon(rng, 10, 8).fan();
            const auto r = ldp::analyze(fan);
            std::vector<std::size_t> smooth;
            for (const auto& c : r.cones)
                if (!c.singular)
                    smooth.push_back(c.index);
            if (smooth.empty())
                continue;
            const std::size_t i = smooth[rng() % smooth.size()];
            const auto up = ldp::blow_up(fan, i);
            const auto down = ldp::blow_down(up, i + 1);
            bad += ldp::analyze(up).singular_count != r.singular_count ||
                   ldp::format_vertices(down.rays()) != ldp::format_vertices(fan.rays());
            ++done;
        }
        return Outcome{bad == 0, n(done) + " fans, " + n(bad) + " failures"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
