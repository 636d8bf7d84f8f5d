#include "fuzznav/sim/sensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzznav::sim {

namespace {

constexpr double kNoHit = std::numeric_limits<double>::infinity();
constexpr double kSurfaceEpsilon = 1e-12;

// Nearest positive intersection parameter, or infinity.
double ray_circle(const Circle& circle, double px, double py, double dx, double dy)
{
    const double ox = circle.cx - px;
    const double oy = circle.cy - py;
    const double b = ox * dx + oy * dy;
    const double disc = b * b - (ox * ox + oy * oy - circle.r * circle.r);
    if (disc < 0.0)
        return kNoHit;
    const double root = std::sqrt(disc);
    if (b - root > kSurfaceEpsilon)
        return b - root;
    if (b + root > kSurfaceEpsilon)
        return b + root;
    return kNoHit;
}

double ray_rect(const Rect& rect, double px, double py, double dx, double dy)
{
    double t_enter = -kNoHit;
    double t_exit = kNoHit;
    const auto apply_slab = [&](double p, double d, double lo, double hi) {
        if (d == 0.0)
            return p >= lo && p <= hi;
        double t1 = (lo - p) / d;
        double t2 = (hi - p) / d;
        if (t1 > t2)
            std::swap(t1, t2);
        t_enter = std::max(t_enter, t1);
        t_exit = std::min(t_exit, t2);
        return t_enter <= t_exit;
    };
    if (!apply_slab(px, dx, rect.xmin, rect.xmax) || !apply_slab(py, dy, rect.ymin, rect.ymax))
        return kNoHit;
    if (t_enter > kSurfaceEpsilon)
        return t_enter;
    if (t_exit > kSurfaceEpsilon)
        return t_exit;
    return kNoHit;
}

} // namespace

double DepthScan::min_range() const
{
    return *std::min_element(ranges.begin(), ranges.end());
}

double ray_cast(const World& world, double origin_x, double origin_y, double angle)
{
    if (point_inside_obstacle(world, origin_x, origin_y))
        throw WorldError("ray origin lies inside an obstacle");
    const double dx = std::cos(angle);
    const double dy = std::sin(angle);
    double nearest = kNoHit;
    for (const auto& obstacle : world.obstacles) {
        const double t = std::holds_alternative<Circle>(obstacle)
            ? ray_circle(std::get<Circle>(obstacle), origin_x, origin_y, dx, dy)
            : ray_rect(std::get<Rect>(obstacle), origin_x, origin_y, dx, dy);
        nearest = std::min(nearest, t);
    }
    // Hits beyond the range window, including the sub-0.4 m blind spot, are
    // indistinguishable from no return.
    if (nearest < SensorModel::kMinRange || nearest > SensorModel::kMaxRange)
        return SensorModel::kMaxRange;
    return nearest;
}

DepthScan scan(const World& world, const RobotState& state)
{
    DepthScan result;
    for (int i = 0; i < SensorModel::kBinCount; ++i)
        result.ranges[i] = ray_cast(world, state.x, state.y, state.theta + DepthScan::bin_angle(i));
    return result;
}

} // namespace fuzznav::sim
