#pragma once

#include "flowgauge/diagram.hpp"
#include "flowgauge/error.hpp"

#include <array>
#include <cstdint>

namespace flowgauge {

enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::North, Direction::East, Direction::South, Direction::West};

const char* to_string(Direction d);

/// Subset of the four compass directions, stored as a bitmask.
class DirectionSet {
public:
    constexpr DirectionSet() = default;

    constexpr void add(Direction d) { bits_ |= mask(d); }
    constexpr bool contains(Direction d) const { return (bits_ & mask(d)) != 0; }
    constexpr int size() const {
        int n = 0;
        for (Direction d : kAllDirections) n += contains(d) ? 1 : 0;
        return n;
    }
    constexpr bool subset_of(DirectionSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

private:
    static constexpr std::uint8_t mask(Direction d) {
        return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(d));
    }
    std::uint8_t bits_ = 0;
};

enum class DirectionMode { OneDirection, TwoDirections };

struct DegenerateEdgeError : Error {
    using Error::Error;
};

/// Angle of the edge in degrees, normalized to [-180, 180). 0 points East,
/// 90 points South (y grows downward), -90 points North.
double edge_angle(const Edge& edge);

/// 90-degree wedge classification. East iff angle in (-45, 45], South iff
/// (45, 135], North iff (-135, -45], West otherwise.
Direction direction_one(double angle_degrees);

/// Half-plane classification; always one horizontal and one vertical
/// component. East iff angle in [-90, 90), South iff angle in [0, 180).
DirectionSet direction_two(double angle_degrees);

DirectionSet classify(double angle_degrees, DirectionMode mode);

} // namespace flowgauge
