#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ldp/polygon.hpp"
#include "ldp/rational.hpp"

namespace ldp {

/// The two-dimensional cone spanned by v_i and v_{i+1}.
struct ConeRecord {
    std::size_t index = 0; // 1-based
    Int det = 0;           // local index det2(v_i, v_{i+1})
    bool singular = false; // det >= 2

    friend bool operator==(const ConeRecord&, const ConeRecord&) = default;
};

/// Everything the toric surface of a fan exposes combinatorially.
struct SurfaceReport {
    std::size_t d = 0;
    Int picard_number = 0; // d - 2
    std::vector<ConeRecord> cones;
    std::vector<Int> f_values;                       // f(1), ..., f(d)
    std::vector<Rational> anticanonical_degrees;     // (-K . D_i)
    bool is_log_del_pezzo = false;                   // min f >= 1
    std::size_t singular_count = 0;

    std::vector<Int> dets() const;

    friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

/// Raised by blow_up when the chosen cone has determinant >= 2.
class ConeSingularError : public std::domain_error {
public:
    explicit ConeSingularError(std::size_t index);
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// f(i) = det(v_{i-1}, v_i) + det(v_i, v_{i+1}) + det(v_{i+1}, v_{i-1}),
/// 1 <= i <= d; twice the signed area of the triangle v_{i-1} v_i v_{i+1}.
Int f_value(const FanCycle& fan, std::size_t i);

/// (-K . D_i) = f(i) / (det(v_{i-1}, v_i) * det(v_i, v_{i+1})).
Rational anticanonical_degree(const FanCycle& fan, std::size_t i);

SurfaceReport analyze(const FanCycle& fan);

/// Inserts v_i + v_{i+1} between v_i and v_{i+1}. Throws ConeSingularError
/// when det2(v_i, v_{i+1}) != 1.
FanCycle blow_up(const FanCycle& fan, std::size_t i);

/// All i (1-based) with v_i = v_{i-1} + v_{i+1}. Empty for d < 4.
std::vector<std::size_t> blow_down_candidates(const FanCycle& fan);

/// Removes ray i, which must be a blow-down candidate (ContractError otherwise).
FanCycle blow_down(const FanCycle& fan, std::size_t i);

/// True iff the singular cones form one cyclic arc (all-singular and
/// all-nonsingular count as contiguous).
bool nonsingular_arc_contiguous(const SurfaceReport& report);

} // namespace ldp
