#include "ldp/surface.hpp"

#include <algorithm>
#include <string>

namespace ldp {

namespace {

std::ptrdiff_t as_index(std::size_t i) { return static_cast<std::ptrdiff_t>(i); }

void require_index(const FanCycle& fan, std::size_t i, const char* op) {
    if (i < 1 || i > fan.size())
        throw ContractError(std::string(op) + ": index " + std::to_string(i) +
                            " outside 1.." + std::to_string(fan.size()));
}

} // namespace

std::vector<Int> SurfaceReport::dets() const {
    std::vector<Int> out;
    out.reserve(cones.size());
    for (const auto& c : cones)
        out.push_back(c.det);
    return out;
}

ConeSingularError::ConeSingularError(std::size_t index)
    : std::domain_error("ConeSingular(" + std::to_string(index) + ")"), index_(index) {}

Int f_value(const FanCycle& fan, std::size_t i) {
    require_index(fan, i, "f_value");
    const auto k = as_index(i);
    const Vec2 prev = fan.ray(k - 1), cur = fan.ray(k), next = fan.ray(k + 1);
    return checked::add(checked::add(det2(prev, cur), det2(cur, next)), det2(next, prev));
}

Rational anticanonical_degree(const FanCycle& fan, std::size_t i) {
    const Int f = f_value(fan, i);
    const auto k = as_index(i);
    return {f, checked::mul(fan.cone_det(k - 1), fan.cone_det(k))};
}

SurfaceReport analyze(const FanCycle& fan) {
    SurfaceReport r;
    r.d = fan.size();
    r.picard_number = static_cast<Int>(r.d) - 2;
    r.is_log_del_pezzo = true;
    for (std::size_t i = 1; i <= r.d; ++i) {
        const Int det = fan.cone_det(as_index(i));
        r.cones.push_back({i, det, det >= 2});
        if (det >= 2)
            ++r.singular_count;
        const Int f = f_value(fan, i);
        r.f_values.push_back(f);
        r.is_log_del_pezzo = r.is_log_del_pezzo && f >= 1;
        r.anticanonical_degrees.push_back(anticanonical_degree(fan, i));
    }
    return r;
}

FanCycle blow_up(const FanCycle& fan, std::size_t i) {
    require_index(fan, i, "blow_up");
    const auto k = as_index(i);
    if (fan.cone_det(k) != 1)
        throw ConeSingularError(i);
    std::vector<Vec2> rays(fan.rays().begin(), fan.rays().end());
    rays.insert(rays.begin() + k, fan.ray(k) + fan.ray(k + 1));
    return validate_fan(rays);
}

std::vector<std::size_t> blow_down_candidates(const FanCycle& fan) {
    std::vector<std::size_t> out;
    if (fan.size() < 4)
        return out;
    for (std::size_t i = 1; i <= fan.size(); ++i) {
        const auto k = as_index(i);
        if (fan.ray(k) == fan.ray(k - 1) + fan.ray(k + 1))
            out.push_back(i);
    }
    return out;
}

FanCycle blow_down(const FanCycle& fan, std::size_t i) {
    require_index(fan, i, "blow_down");
    const auto k = as_index(i);
    if (fan.size() < 4 || fan.ray(k) != fan.ray(k - 1) + fan.ray(k + 1))
        throw ContractError("blow_down: ray " + std::to_string(i) +
                            " is not the sum of its neighbours");
    std::vector<Vec2> rays(fan.rays().begin(), fan.rays().end());
    rays.erase(rays.begin() + (k - 1));
    return validate_fan(rays);
}

bool nonsingular_arc_contiguous(const SurfaceReport& report) {
    const std::size_t d = report.cones.size();
    std::size_t transitions = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (report.cones[i].singular != report.cones[(i + 1) % d].singular)
            ++transitions;
    return transitions <= 2;
}

} // namespace ldp
