#include "flowgauge/direction.hpp"

#include "support/builders.hpp"

#include <doctest.h>

using namespace flowgauge;
namespace ts = testsupport;

TEST_CASE("edge_angle in screen coordinates") {
    CHECK(edge_angle(ts::edge("e", "a", "b", 0, 0, 10, 0)) == doctest::Approx(0.0));
    CHECK(edge_angle(ts::edge("e", "a", "b", 0, 0, 0, 10)) == doctest::Approx(90.0));
    CHECK(edge_angle(ts::edge("e", "a", "b", 0, 0, -10, -10)) == doctest::Approx(-135.0));
    CHECK(edge_angle(ts::edge("e", "a", "b", 0, 0, -10, 0)) == doctest::Approx(-180.0));
}

TEST_CASE("edge_angle rejects degenerate edges") {
    CHECK_THROWS_AS(edge_angle(ts::edge("e", "a", "b", 3, 7, 3, 7)), DegenerateEdgeError);
}

TEST_CASE("direction_one wedges") {
    CHECK(direction_one(0.0) == Direction::East);
    CHECK(direction_one(-90.0) == Direction::North);
    CHECK(direction_one(90.0) == Direction::South);
    CHECK(direction_one(179.0) == Direction::West);
    // boundary angles, closed on the clockwise end
    CHECK(direction_one(45.0) == Direction::East);
    CHECK(direction_one(135.0) == Direction::South);
    CHECK(direction_one(-45.0) == Direction::North);
    CHECK(direction_one(-135.0) == Direction::West);
    CHECK(direction_one(-180.0) == Direction::West);
}

TEST_CASE("direction_two half planes") {
    DirectionSet ne = direction_two(-30.0);
    CHECK(ne.contains(Direction::East));
    CHECK(ne.contains(Direction::North));
    CHECK(ne.size() == 2);

    DirectionSet se = direction_two(0.0);
    CHECK(se.contains(Direction::East));
    CHECK(se.contains(Direction::South));

    DirectionSet sw = direction_two(120.0);
    CHECK(sw.contains(Direction::West));
    CHECK(sw.contains(Direction::South));
}

TEST_CASE("direction_two always yields one vertical and one horizontal component") {
    for (double a = -180.0; a < 180.0; a += 0.25) {
        DirectionSet set = direction_two(a);
        CHECK(set.size() == 2);
        CHECK((set.contains(Direction::North) ^ set.contains(Direction::South)));
        CHECK((set.contains(Direction::East) ^ set.contains(Direction::West)));
    }
}

TEST_CASE("single direction is contained in the direction pair") {
    for (double a = -180.0; a < 180.0; a += 0.125) {
        CHECK(classify(a, DirectionMode::OneDirection)
                  .subset_of(classify(a, DirectionMode::TwoDirections)));
    }
}

TEST_CASE("rotating by 90 degrees cycles the single direction") {
    auto rotated = [](Direction d) {
        switch (d) {
        case Direction::East: return Direction::South;
        case Direction::South: return Direction::West;
        case Direction::West: return Direction::North;
        case Direction::North: return Direction::East;
        }
        return d;
    };
    for (double a = -179.9; a < 180.0; a += 0.2) {
        double b = a + 90.0;
        if (b >= 180.0) b -= 360.0;
        CHECK(direction_one(b) == rotated(direction_one(a)));
    }
}
