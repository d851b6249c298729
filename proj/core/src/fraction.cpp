#include "ffdesign/fraction.hpp"

#include <stdexcept>

namespace ffd {

Fraction empty_fraction(const DesignSpace& space) {
    return Fraction{std::vector<std::uint8_t>(space.run_count(), 0)};
}

Fraction full_fraction(const DesignSpace& space) {
    return Fraction{std::vector<std::uint8_t>(space.run_count(), 1)};
}

Fraction fraction_from_points(const DesignSpace& space,
                              const std::vector<std::vector<Rational>>& points) {
    const int n = space.factor_count();
    Fraction f = empty_fraction(space);
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("design point: wrong arity");
        RunIndex idx(n);
        for (int j = 0; j < n; ++j) {
            const auto& levels = space.factors()[j].levels;
            int pos = -1;
            for (int k = 0; k < static_cast<int>(levels.size()); ++k)
                if (levels[k] == p[j]) { pos = k; break; }
            if (pos < 0)
                throw std::invalid_argument("design point: value " + to_string(p[j]) +
                                            " is not a level of factor " + std::to_string(j + 1));
            idx[j] = pos + 1;
        }
        const std::size_t rank = space.run_rank(idx);
        if (f.y[rank]) throw std::invalid_argument("design point: duplicate row");
        f.y[rank] = 1;
    }
    return f;
}

std::vector<std::vector<Rational>> points_of(const DesignSpace& space, const Fraction& f) {
    std::vector<std::vector<Rational>> pts;
    for (std::size_t k = 0; k < space.run_count(); ++k)
        if (f.y[k]) pts.push_back(space.point_of(space.run_indices()[k]));
    return pts;
}

} // namespace ffd
