#include "fuzznav/control/controller.hpp"

#include "fuzznav/dsl/parser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzznav::control {

namespace {

void require_interface(const fuzzy::FuzzyInferenceSystem& fis, const char* role,
                       std::initializer_list<const char*> inputs)
{
    const auto violations = fuzzy::validate(fis);
    if (!violations.empty())
        throw std::invalid_argument(std::string(role) + " system is invalid: "
                                    + violations.front().location + ": "
                                    + violations.front().message);
    for (const char* name : inputs)
        if (fis.find_input(name) == nullptr)
            throw std::invalid_argument(std::string(role) + " system lacks input '" + name + "'");
    for (const char* name : {"v", "omega"})
        if (fis.find_output(name) == nullptr)
            throw std::invalid_argument(std::string(role) + " system lacks output '" + name + "'");
}

} // namespace

double heading_error(const sim::RobotState& state, const GoalSpec& goal)
{
    const double dx = goal.x - state.x;
    const double dy = goal.y - state.y;
    if (std::hypot(dx, dy) < 1e-12)
        return 0.0;
    return sim::wrap_angle(std::atan2(dy, dx) - state.theta);
}

SectorDistances sectorize(const sim::DepthScan& scan)
{
    const auto section_min = [&scan](int first, int last) {
        double lowest = scan.ranges[first];
        for (int i = first + 1; i <= last; ++i)
            lowest = std::min(lowest, scan.ranges[i]);
        return lowest;
    };
    return {section_min(0, 6), section_min(7, 12), section_min(13, 19)};
}

double fusion_weight(const FusionPolicy& policy, const sim::DepthScan& scan)
{
    const double d_min = scan.min_range();
    return std::clamp((d_min - policy.d_low) / (policy.d_high - policy.d_low), 0.0, 1.0);
}

sim::VelocityCommand fuse(const sim::VelocityCommand& tflc_cmd,
                          const sim::VelocityCommand& oaflc_cmd, double x)
{
    return {x * tflc_cmd.v() + (1.0 - x) * oaflc_cmd.v(),
            x * tflc_cmd.omega() + (1.0 - x) * oaflc_cmd.omega()};
}

NavigationController::NavigationController(fuzzy::FuzzyInferenceSystem tflc,
                                           fuzzy::FuzzyInferenceSystem oaflc)
    : tflc_(std::move(tflc)), oaflc_(std::move(oaflc))
{
    require_interface(tflc_, "tracking", {"dist", "heading"});
    require_interface(oaflc_, "obstacle-avoidance", {"a", "b", "c"});
}

NavigationController NavigationController::with_default_rules()
{
    return NavigationController(dsl::parse(default_tflc_rules(), "tflc.fis"),
                                dsl::parse(default_oaflc_rules(), "oaflc.fis"));
}

NavigationController NavigationController::from_files(const std::string& tflc_path,
                                                      const std::string& oaflc_path)
{
    return NavigationController(dsl::parse_file(tflc_path), dsl::parse_file(oaflc_path));
}

sim::VelocityCommand NavigationController::tflc(const sim::RobotState& state,
                                                const GoalSpec& goal) const
{
    const double distance = std::hypot(goal.x - state.x, goal.y - state.y);
    const auto out = fuzzy::infer(tflc_, {{"dist", distance},
                                          {"heading", heading_error(state, goal)}});
    return {out.at("v"), out.at("omega")};
}

sim::VelocityCommand NavigationController::oaflc(const SectorDistances& sectors) const
{
    const auto out = fuzzy::infer(oaflc_, {{"a", sectors.left},
                                           {"b", sectors.center},
                                           {"c", sectors.right}});
    return {out.at("v"), out.at("omega")};
}

ControlDecision NavigationController::control_step(const sim::RobotState& state,
                                                   const GoalSpec& goal,
                                                   const sim::DepthScan& scan,
                                                   const FusionPolicy& policy) const
{
    ControlDecision decision;
    decision.tflc_command = tflc(state, goal);
    decision.oaflc_command = oaflc(sectorize(scan));
    decision.fusion_x = fusion_weight(policy, scan);
    decision.command = fuse(decision.tflc_command, decision.oaflc_command, decision.fusion_x);
    return decision;
}

} // namespace fuzznav::control
