#pragma once

#include "ffdesign/design_space.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace ffd {

// A fraction F of the full factorial design, as a 0/1 membership vector over
// the run index set in the space's index order.
struct Fraction {
    std::vector<std::uint8_t> y;

    std::size_t size() const {
        std::size_t s = 0;
        for (auto v : y) s += v;
        return s;
    }

    auto operator<=>(const Fraction&) const = default;
};

Fraction empty_fraction(const DesignSpace& space);
Fraction full_fraction(const DesignSpace& space);

// Membership vector from a list of points given in level values. Throws
// std::invalid_argument on unknown level values, duplicate points, or wrong
// arity.
Fraction fraction_from_points(const DesignSpace& space,
                              const std::vector<std::vector<Rational>>& points);

// Selected points in index order.
std::vector<std::vector<Rational>> points_of(const DesignSpace& space, const Fraction& f);

} // namespace ffd
