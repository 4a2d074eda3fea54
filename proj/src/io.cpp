#include "ldp/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace ldp {

namespace {

Json vertices_json(std::span<const Vec2> vs) {
    Json arr = Json::array();
    for (Vec2 v : vs)
        arr.push_back({v.x, v.y});
    return arr;
}

std::vector<Vec2> vertices_from_json(const Json& j) {
    std::vector<Vec2> out;
    for (const auto& pair : j.at("vertices")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("vertex must be an [x, y] pair");
        out.push_back({pair[0].get<Int>(), pair[1].get<Int>()});
    }
    return out;
}

} // namespace

Json to_json(const SurfaceReport& r) {
    Json j;
    j["d"] = r.d;
    j["rho"] = r.picard_number;
    Json cones = Json::array();
    for (const auto& c : r.cones)
        cones.push_back({{"index", c.index}, {"det", c.det}, {"singular", c.singular}});
    j["cones"] = cones;
    j["f"] = r.f_values;
    Json degrees = Json::array();
    for (const auto& q : r.anticanonical_degrees)
        degrees.push_back({q.num(), q.den()});
    j["anticanonical_degrees"] = degrees;
    j["log_del_pezzo"] = r.is_log_del_pezzo;
    j["singular"] = r.singular_count;
    return j;
}

SurfaceReport surface_report_from_json(const Json& j) {
    SurfaceReport r;
    r.d = j.at("d").get<std::size_t>();
    r.picard_number = j.at("rho").get<Int>();
    for (const auto& c : j.at("cones"))
        r.cones.push_back({c.at("index").get<std::size_t>(), c.at("det").get<Int>(),
                           c.at("singular").get<bool>()});
    r.f_values = j.at("f").get<std::vector<Int>>();
    for (const auto& q : j.at("anticanonical_degrees"))
        r.anticanonical_degrees.emplace_back(q.at(0).get<Int>(), q.at(1).get<Int>());
    r.is_log_del_pezzo = j.at("log_del_pezzo").get<bool>();
    r.singular_count = j.at("singular").get<std::size_t>();
    return r;
}

Json to_json(const FamilyParams& fp) {
    Json j;
    j["tag"] = std::string(to_string(fp.tag));
    const std::optional<Int> FamilyParams::*slots[] = {&FamilyParams::p, &FamilyParams::q,
                                                       &FamilyParams::r, &FamilyParams::s,
                                                       &FamilyParams::t};
    const char* names[] = {"p", "q", "r", "s", "t"};
    for (std::size_t k = 0; k < 5; ++k)
        if (fp.*slots[k])
            j[names[k]] = *(fp.*slots[k]);
    return j;
}

FamilyParams family_params_from_json(const Json& j) {
    const auto tag = parse_family_tag(j.at("tag").get<std::string>());
    if (!tag)
        throw std::runtime_error("unknown family tag " + j.at("tag").dump());
    FamilyParams fp;
    fp.tag = *tag;
    std::optional<Int> FamilyParams::*slots[] = {&FamilyParams::p, &FamilyParams::q,
                                                 &FamilyParams::r, &FamilyParams::s,
                                                 &FamilyParams::t};
    const char* names[] = {"p", "q", "r", "s", "t"};
    for (std::size_t k = 0; k < 5; ++k)
        if (j.contains(names[k]))
            fp.*slots[k] = j[names[k]].get<Int>();
    return fp;
}

Json to_json(const CatalogEntry& e) {
    Json j;
    j["vertices"] = vertices_json(e.vertices.vertices);
    j["d"] = e.d;
    j["rho"] = e.rho;
    j["dets"] = e.dets;
    j["f"] = e.f;
    j["singular"] = e.singular;
    j["family"] = e.family ? to_json(*e.family) : Json(nullptr);
    j["three_case"] = e.three_case ? Json(std::string(to_string(*e.three_case))) : Json(nullptr);
    return j;
}

CatalogEntry catalog_entry_from_json(const Json& j) {
    CatalogEntry e;
    e.vertices.vertices = vertices_from_json(j);
    e.d = j.at("d").get<std::size_t>();
    e.rho = j.at("rho").get<Int>();
    e.dets = j.at("dets").get<std::vector<Int>>();
    e.f = j.at("f").get<std::vector<Int>>();
    e.singular = j.at("singular").get<std::size_t>();
    if (j.contains("family") && !j["family"].is_null())
        e.family = family_params_from_json(j["family"]);
    if (j.contains("three_case") && !j["three_case"].is_null()) {
        const auto c = parse_three_case(j["three_case"].get<std::string>());
        if (!c)
            throw std::runtime_error("unknown three_case " + j["three_case"].dump());
        e.three_case = c;
    }
    return e;
}

Json to_json(const VerificationReport& rep) {
    Json j;
    j["entries"] = rep.entries;
    j["box"] = rep.box ? Json(*rep.box) : Json(nullptr);
    j["passed"] = rep.passed();
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"checked", c.checked},
                          {"passed", c.counterexamples.empty()},
                          {"counterexamples", c.counterexamples}});
    j["checks"] = checks;
    j["caveat"] = rep.caveat;
    return j;
}

void write_catalog(std::ostream& out, std::span<const CatalogEntry> entries) {
    for (const auto& e : entries)
        out << to_json(e).dump() << '\n';
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
    std::vector<CatalogEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(catalog_entry_from_json(Json::parse(line)));
        } catch (const std::exception& ex) {
            throw std::runtime_error("catalog line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

std::string format_report(const SurfaceReport& r) {
    std::ostringstream os;
    os << "d               " << r.d << '\n';
    os << "picard number   " << r.picard_number << '\n';
    os << "log del Pezzo   " << (r.is_log_del_pezzo ? "yes" : "no") << '\n';
    os << "singular cones  " << r.singular_count << '\n';
    os << '\n' << std::setw(5) << "i" << std::setw(8) << "det" << std::setw(8) << "f"
       << std::setw(12) << "(-K.D_i)" << "  singular\n";
    for (std::size_t k = 0; k < r.d; ++k) {
        os << std::setw(5) << r.cones[k].index << std::setw(8) << r.cones[k].det << std::setw(8)
           << r.f_values[k] << std::setw(12) << r.anticanonical_degrees[k].to_string() << "  "
           << (r.cones[k].singular ? "yes" : "no") << '\n';
    }
    return os.str();
}

std::string render_svg(const LdpPolygon& q) {
    constexpr Int scale = 40;
    constexpr Int margin = 20;
    const auto vs = q.vertices();

    Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (Vec2 v : vs) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    --min_x, --min_y, ++max_x, ++max_y;
    const Int width = 2 * margin + (max_x - min_x) * scale;
    const Int height = 2 * margin + (max_y - min_y) * scale;
    auto px = [&](Int x) { return margin + (x - min_x) * scale; };
    auto py = [&](Int y) { return margin + (max_y - y) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (Int x = min_x; x <= max_x; ++x)
        os << "<line x1=\"" << px(x) << "\" y1=\"" << py(max_y) << "\" x2=\"" << px(x)
           << "\" y2=\"" << py(min_y) << "\"/>\n";
    for (Int y = min_y; y <= max_y; ++y)
        os << "<line x1=\"" << px(min_x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(max_x)
           << "\" y2=\"" << py(y) << "\"/>\n";
    os << "</g>\n<g fill=\"#999999\">\n";
    for (Int x = min_x; x <= max_x; ++x)
        for (Int y = min_y; y <= max_y; ++y)
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2\"/>\n";
    os << "</g>\n";

    os << "<polygon points=\"";
    for (std::size_t k = 0; k < vs.size(); ++k)
        os << (k ? " " : "") << px(vs[k].x) << ',' << py(vs[k].y);
    os << "\" fill=\"#cfe2f3\" fill-opacity=\"0.6\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
    os << "<circle class=\"origin\" cx=\"" << px(0) << "\" cy=\"" << py(0)
       << "\" r=\"5\" fill=\"#c00000\"/>\n";

    os << "<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
          "dominant-baseline=\"middle\">\n";
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const Vec2 a = vs[k], b = vs[(k + 1) % vs.size()];
        // Outward normal of a counterclockwise edge, in screen coordinates.
        const double nx = static_cast<double>(b.y - a.y);
        const double ny = static_cast<double>(b.x - a.x);
        const double len = std::hypot(nx, ny);
        const Int lx = (px(a.x) + px(b.x)) / 2 + std::lround(14.0 * nx / len);
        const Int ly = (py(a.y) + py(b.y)) / 2 + std::lround(14.0 * ny / len);
        os << "<text class=\"det\" x=\"" << lx << "\" y=\"" << ly << "\">" << det2(a, b)
           << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

void emit_svg(const LdpPolygon& q, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << render_svg(q);
    if (!out.flush())
        throw std::runtime_error("write failed for " + path.string());
}

} // namespace ldp
