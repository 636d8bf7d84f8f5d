#pragma once

#include <utility>

namespace fuzznav::sim {

// Kobuki-class limits and dimensions. Velocity limits follow the base
// hardware spec; wheelbase and body radius are nominal values frozen so
// results stay deterministic.
inline constexpr double kMaxLinearVelocity = 0.7;    // m/s
inline constexpr double kMaxAngularVelocity = 3.141592653589793; // rad/s
inline constexpr double kWheelBase = 0.23;           // m
inline constexpr double kBodyRadius = 0.18;          // m

// Wraps an angle to (-pi, pi]; the tie at the antipode resolves to +pi.
double wrap_angle(double angle);

struct RobotState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0; // heading, kept in (-pi, pi]

    static RobotState make(double x, double y, double theta)
    {
        return {x, y, wrap_angle(theta)};
    }
};

class VelocityCommand {
public:
    // Construction clamps to the base limits.
    VelocityCommand(double v, double omega);
    VelocityCommand() : VelocityCommand(0.0, 0.0) {}

    double v() const { return v_; }
    double omega() const { return omega_; }

private:
    double v_;
    double omega_;
};

// Exact arc integration of the unicycle model over dt seconds.
RobotState step(const RobotState& state, const VelocityCommand& cmd, double dt);

// Differential-drive conversion, (left, right) wheel speeds in m/s.
std::pair<double, double> wheel_speeds(const VelocityCommand& cmd);
VelocityCommand command_from_wheels(double v_left, double v_right);

} // namespace fuzznav::sim
