#include "fuzznav/sim/robot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fuzznav::sim {

double wrap_angle(double angle)
{
    constexpr double pi = std::numbers::pi;
    double r = std::fmod(angle + pi, 2.0 * pi);
    if (r <= 0.0)
        r += 2.0 * pi;
    return r - pi;
}

VelocityCommand::VelocityCommand(double v, double omega)
    : v_(std::clamp(v, -kMaxLinearVelocity, kMaxLinearVelocity)),
      omega_(std::clamp(omega, -kMaxAngularVelocity, kMaxAngularVelocity))
{
}

RobotState step(const RobotState& state, const VelocityCommand& cmd, double dt)
{
    const double v = cmd.v();
    const double omega = cmd.omega();
    if (std::abs(omega) < 1e-9) {
        return {state.x + v * dt * std::cos(state.theta),
                state.y + v * dt * std::sin(state.theta),
                wrap_angle(state.theta)};
    }
    const double theta_next = state.theta + omega * dt;
    const double radius = v / omega;
    return {state.x + radius * (std::sin(theta_next) - std::sin(state.theta)),
            state.y - radius * (std::cos(theta_next) - std::cos(state.theta)),
            wrap_angle(theta_next)};
}

std::pair<double, double> wheel_speeds(const VelocityCommand& cmd)
{
    const double half_base = kWheelBase / 2.0;
    return {cmd.v() - cmd.omega() * half_base, cmd.v() + cmd.omega() * half_base};
}

VelocityCommand command_from_wheels(double v_left, double v_right)
{
    return {(v_left + v_right) / 2.0, (v_right - v_left) / kWheelBase};
}

} // namespace fuzznav::sim
