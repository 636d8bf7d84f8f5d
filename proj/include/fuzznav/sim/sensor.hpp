#pragma once

#include "fuzznav/sim/world.hpp"

#include <array>

namespace fuzznav::sim {

// Planar depth sensor with the Xion near-mode geometry: 58.5 degree
// horizontal field of view discretized into 20 bins, valid returns between
// 0.4 m and 3 m. Anything nearer than 0.4 m is a blind spot and reads as
// no-return, exactly like anything beyond 3 m.
struct SensorModel {
    static constexpr int kBinCount = 20;
    static constexpr double kFov = 58.5 * 3.141592653589793 / 180.0; // rad
    static constexpr double kMinRange = 0.4; // m
    static constexpr double kMaxRange = 3.0; // m, doubles as the no-return value
    static constexpr double kBinWidth = kFov / kBinCount;
};

struct DepthScan {
    // ranges[0] is the leftmost bin (largest positive relative angle);
    // every value lies in [0.4, 3.0] with 3.0 meaning no return.
    std::array<double, SensorModel::kBinCount> ranges{};

    // Bin-center angle relative to the heading, decreasing with the index.
    static double bin_angle(int index)
    {
        return SensorModel::kFov / 2.0 - (index + 0.5) * SensorModel::kBinWidth;
    }

    double min_range() const;
};

// Nearest obstacle distance along a single ray, folded through the sensor's
// range window: hits beyond 3 m or inside the 0.4 m blind spot report 3.0.
// The origin must not be strictly inside an obstacle.
double ray_cast(const World& world, double origin_x, double origin_y, double angle);

// 20-bin scan from the robot pose, left to right.
DepthScan scan(const World& world, const RobotState& state);

} // namespace fuzznav::sim
