#pragma once

#include "fuzznav/sim/robot.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fuzznav::sim {

struct Circle {
    double cx = 0.0, cy = 0.0, r = 0.0;
};

struct Rect {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;
};

using Obstacle = std::variant<Circle, Rect>;

class WorldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable 2D obstacle map, optionally bounded by an axis-aligned arena.
struct World {
    std::vector<Obstacle> obstacles;
    std::optional<Rect> bounds;
};

// Signed distance from a point to the obstacle surface (negative inside).
double signed_distance(const Obstacle& obstacle, double x, double y);

// Distance from the robot body to the nearest obstacle surface or, when
// bounds are set, to the arena boundary; negative when overlapping.
double clearance(const World& world, const RobotState& state);

bool in_collision(const World& world, const RobotState& state);

// True when the point lies strictly inside some obstacle.
bool point_inside_obstacle(const World& world, double x, double y);

// Parses the line-oriented world format:
//   bounds <xmin> <ymin> <xmax> <ymax>
//   circle <cx> <cy> <r>
//   rect <xmin> <ymin> <xmax> <ymax>
// Unknown keywords and malformed geometry raise WorldError.
World parse_world(const std::string& source, const std::string& source_name = "<input>");
World load_world(const std::string& path);

} // namespace fuzznav::sim
