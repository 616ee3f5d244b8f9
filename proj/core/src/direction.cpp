#include "flowgauge/direction.hpp"

#include <cmath>
#include <numbers>

namespace flowgauge {

const char* to_string(Direction d) {
    switch (d) {
    case Direction::North: return "North";
    case Direction::East: return "East";
    case Direction::South: return "South";
    case Direction::West: return "West";
    }
    return "?";
}

double edge_angle(const Edge& edge) {
    auto [dx, dy] = edge_vector(edge);
    if (dx == 0.0 && dy == 0.0) {
        throw DegenerateEdgeError("edge '" + edge.id + "' has zero length, angle undefined");
    }
    double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
    if (deg >= 180.0) deg -= 360.0; // atan2 may return exactly +pi
    return deg;
}

Direction direction_one(double a) {
    if (a > -45.0 && a <= 45.0) return Direction::East;
    if (a > 45.0 && a <= 135.0) return Direction::South;
    if (a > -135.0 && a <= -45.0) return Direction::North;
    return Direction::West;
}

DirectionSet direction_two(double a) {
    DirectionSet set;
    set.add(a >= -90.0 && a < 90.0 ? Direction::East : Direction::West);
    set.add(a >= 0.0 && a < 180.0 ? Direction::South : Direction::North);
    return set;
}

DirectionSet classify(double a, DirectionMode mode) {
    if (mode == DirectionMode::OneDirection) {
        DirectionSet set;
        set.add(direction_one(a));
        return set;
    }
    return direction_two(a);
}

} // namespace flowgauge
