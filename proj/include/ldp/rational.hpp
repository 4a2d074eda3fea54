#pragma once

#include <string>

#include "ldp/lattice.hpp"

namespace ldp {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(Int num) : num_(num) {} // NOLINT(implicit)
    Rational(Int num, Int den);

    Int num() const { return num_; }
    Int den() const { return den_; }

    int sign() const { return (num_ > 0) - (num_ < 0); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    friend bool operator==(const Rational&, const Rational&) = default;

    /// "n" or "n/d"
    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

} // namespace ldp
