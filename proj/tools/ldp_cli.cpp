// ldp: command-line front end for LDP-polygon analysis, enumeration and
// classification checks.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "ldp/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<ldp::CatalogEntry> load_catalog(const std::string& path) {
    if (path == "-")
        return ldp::read_catalog(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return ldp::read_catalog(in);
}

void store_catalog(const std::string& path, std::span<const ldp::CatalogEntry> entries) {
    if (path.empty() || path == "-") {
        ldp::write_catalog(std::cout, entries);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot open " + path + " for writing");
    ldp::write_catalog(out, entries);
}

ldp::FanCycle parse_fan(const std::string& text) {
    return ldp::validate_fan(ldp::parse_vertices(text));
}

int cmd_analyze(const std::string& vertices, bool json) {
    const ldp::FanCycle fan = parse_fan(vertices);
    const ldp::SurfaceReport report = ldp::analyze(fan);
    if (json) {
        ldp::Json j = ldp::to_json(report);
        j["vertices"] = ldp::format_vertices(fan.rays());
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "vertices        " << ldp::format_vertices(fan.rays()) << '\n'
                  << ldp::format_report(report);
    }
    return kOk;
}

int cmd_enumerate(ldp::Int box, const std::string& out_path, unsigned jobs, bool classify) {
    if (box < 1)
        throw InputError("--box must be at least 1");
    const auto started = std::chrono::steady_clock::now();
    auto entries = ldp::enumerate_ldp({box}, jobs);
    if (classify)
        ldp::classify_entries(entries);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    store_catalog(out_path, entries);

    // Run metadata goes to a sidecar so the catalog itself stays byte-stable.
    if (!out_path.empty() && out_path != "-") {
        ldp::Json meta;
        meta["box"] = box;
        meta["jobs"] = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
        meta["classes"] = entries.size();
        meta["classified"] = classify;
        meta["elapsed_ms"] = elapsed.count();
        std::ofstream(out_path + ".meta.json") << meta.dump(2) << '\n';
    }
    std::cerr << entries.size() << " classes in box [-" << box << ',' << box << "]^2\n";
    return kOk;
}

int cmd_classify(const std::string& in_path, const std::string& out_path) {
    auto entries = load_catalog(in_path);
    ldp::classify_entries(entries);
    store_catalog(out_path, entries);
    return kOk;
}

int cmd_family(const std::string& tag_name, const std::map<char, std::optional<ldp::Int>>& values) {
    const auto tag = ldp::parse_family_tag(tag_name);
    if (!tag)
        throw InputError("unknown family '" + tag_name + "'");
    ldp::FamilyParams fp;
    fp.tag = *tag;
    fp.p = values.at('p');
    fp.q = values.at('q');
    fp.r = values.at('r');
    fp.s = values.at('s');
    fp.t = values.at('t');
    if (auto bad = ldp::first_violation(fp)) {
        std::cerr << "invalid parameters: violated constraint " << *bad << '\n';
        return kInputError;
    }
    std::cout << ldp::format_vertices(ldp::generate(fp).polygon.vertices()) << '\n';
    return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, bool sl_only) {
    const auto qa = ldp::ldp_polygon_from_vertex_set(ldp::parse_vertices(a));
    const auto qb = ldp::ldp_polygon_from_vertex_set(ldp::parse_vertices(b));
    const auto mode = sl_only ? ldp::EquivalenceMode::Sl : ldp::EquivalenceMode::Gl;
    if (auto m = ldp::are_equivalent(qa, qb, mode))
        std::cout << m->to_string() << '\n';
    else
        std::cout << "inequivalent\n";
    return kOk;
}

int cmd_blowup(const std::string& vertices, std::size_t cone) {
    const ldp::FanCycle fan = parse_fan(vertices);
    if (cone < 1 || cone > fan.size())
        throw InputError("--cone must lie in 1.." + std::to_string(fan.size()));
    std::cout << ldp::format_vertices(ldp::blow_up(fan, cone).rays()) << '\n';
    return kOk;
}

int cmd_check(const std::string& in_path, std::optional<ldp::Int> box) {
    const auto entries = load_catalog(in_path);
    const auto report = ldp::verify_catalog(entries, box);
    std::cout << ldp::to_json(report).dump(2) << '\n';
    return report.passed() ? kOk : kVerificationFailed;
}

int cmd_canonical(const std::string& vertices, bool sl_only) {
    const auto q = ldp::ldp_polygon_from_vertex_set(ldp::parse_vertices(vertices));
    const auto mode = sl_only ? ldp::EquivalenceMode::Sl : ldp::EquivalenceMode::Gl;
    std::cout << ldp::format_vertices(ldp::canonical_form(q, mode).vertices) << '\n';
    return kOk;
}

int cmd_identify(const std::string& vertices) {
    const auto q = ldp::ldp_polygon_from_vertex_set(ldp::parse_vertices(vertices));
    const auto report = ldp::analyze(q.fan());
    ldp::Json j;
    j["singular"] = report.singular_count;
    const auto fp = ldp::identify(q);
    j["family"] = fp ? ldp::to_json(*fp) : ldp::Json(nullptr);
    if (report.singular_count == 3)
        j["three_case"] = std::string(ldp::to_string(ldp::classify_three(q)));
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_svg(const std::string& vertices, const std::string& out_path) {
    const auto q = ldp::validate_ldp_polygon(ldp::parse_vertices(vertices));
    try {
        ldp::emit_svg(q, out_path);
    } catch (const std::runtime_error& ex) {
        throw InputError(ex.what());
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric log del Pezzo polygon toolkit"};
    app.require_subcommand(1);

    int status = kOk;
    auto guard = [&status](auto&& fn) {
        return [&status, fn]() { status = fn(); };
    };

    std::string vertices;
    bool json = false;
    auto* analyze = app.add_subcommand("analyze", "Analyze the fan spanned by a ray cycle");
    analyze->add_option("vertices", vertices, "Rays as \"x,y;x,y;...\" (counterclockwise)")
        ->required();
    analyze->add_flag("--json", json, "Print the report as JSON");
    analyze->callback(guard([&] { return cmd_analyze(vertices, json); }));

    ldp::Int box = 1;
    std::string out_path, in_path;
    unsigned jobs = 0;
    bool classify = false;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate LDP-polygon classes in a box");
    enumerate->add_option("--box", box, "Coordinate bound n (vertices in [-n, n]^2)")->required();
    enumerate->add_option("--out", out_path, "JSONL output file (default: stdout)");
    enumerate->add_option("--jobs", jobs, "Worker threads (default: logical cores)");
    enumerate->add_flag("--classify", classify, "Also run family identification");
    enumerate->callback(guard([&] { return cmd_enumerate(box, out_path, jobs, classify); }));

    auto* classify_cmd = app.add_subcommand("classify", "Fill family fields of a catalog");
    classify_cmd->add_option("--in", in_path, "JSONL catalog ('-' for stdin)")->required();
    classify_cmd->add_option("--out", out_path, "JSONL output file (default: stdout)");
    classify_cmd->callback(guard([&] { return cmd_classify(in_path, out_path); }));

    std::string tag;
    std::map<char, std::optional<ldp::Int>> params{
        {'p', {}}, {'q', {}}, {'r', {}}, {'s', {}}, {'t', {}}};
    auto* family = app.add_subcommand("family", "Generate a family member");
    family->add_option("tag", tag, "dais1|dais2|dais3|two1|two2|two3|three5")->required();
    for (auto& [name, slot] : params)
        family->add_option(std::string("--") + name, slot, std::string("Parameter ") + name);
    family->callback(guard([&] { return cmd_family(tag, params); }));

    std::string a, b;
    bool sl_only = false;
    auto* equiv = app.add_subcommand("equiv", "Test unimodular equivalence of two polygons");
    equiv->add_option("--a", a, "First vertex set")->required();
    equiv->add_option("--b", b, "Second vertex set")->required();
    equiv->add_flag("--sl", sl_only, "Only admit determinant +1");
    equiv->callback(guard([&] { return cmd_equiv(a, b, sl_only); }));

    std::size_t cone = 0;
    auto* blowup = app.add_subcommand("blowup", "Blow up a nonsingular cone");
    blowup->add_option("--vertices", vertices, "Ray cycle")->required();
    blowup->add_option("--cone", cone, "1-based cone index i (between v_i and v_{i+1})")
        ->required();
    blowup->callback(guard([&] { return cmd_blowup(vertices, cone); }));

    std::optional<ldp::Int> check_box;
    auto* check = app.add_subcommand("check", "Verify the classification over a catalog");
    check->add_option("--in", in_path, "JSONL catalog ('-' for stdin)")->required();
    check->add_option("--box", check_box, "Box the catalog was enumerated in (for the report)");
    check->callback(guard([&] { return cmd_check(in_path, check_box); }));

    auto* canonical = app.add_subcommand("canonical", "Print the canonical form of a polygon");
    canonical->add_option("--vertices", vertices, "Vertex set")->required();
    canonical->add_flag("--sl", sl_only, "Only admit determinant +1");
    canonical->callback(guard([&] { return cmd_canonical(vertices, sl_only); }));

    auto* identify = app.add_subcommand("identify", "Match a polygon against the families");
    identify->add_option("--vertices", vertices, "Vertex set")->required();
    identify->callback(guard([&] { return cmd_identify(vertices); }));

    auto* svg = app.add_subcommand("svg", "Draw a polygon as SVG");
    svg->add_option("--vertices", vertices, "Counterclockwise vertex list")->required();
    svg->add_option("--out", out_path, "Output file")->required();
    svg->callback(guard([&] { return cmd_svg(vertices, out_path); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    } catch (const ldp::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const ldp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const ldp::ConeSingularError& e) {
        std::cerr << "cannot blow up: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ldp::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kInputError;
    } catch (const std::runtime_error& e) {
        // Catalog parse failures and similar malformed input.
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return status;
}
