#ifndef NDTSIM_GEOMETRY_HPP
#define NDTSIM_GEOMETRY_HPP

#include <cmath>

namespace ndtsim {

struct Position {
    double x{0.0};
    double y{0.0};
};

inline double Distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace ndtsim

#endif
