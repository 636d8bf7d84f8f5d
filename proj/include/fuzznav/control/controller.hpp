#pragma once

#include "fuzznav/fuzzy/inference.hpp"
#include "fuzznav/sim/robot.hpp"
#include "fuzznav/sim/sensor.hpp"

#include <string>

namespace fuzznav::control {

struct GoalSpec {
    double x = 0.0;
    double y = 0.0;
    double reach_threshold = 0.15; // m
};

// Minimum range per angular third of the scan, left to right.
struct SectorDistances {
    double left = 0.0;   // column A
    double center = 0.0; // column B
    double right = 0.0;  // column C
};

// Blend schedule between the tracking and obstacle-avoidance controllers:
// pure avoidance at or below d_low, pure tracking at or above d_high,
// linear in between.
struct FusionPolicy {
    double d_low = 0.5;  // m
    double d_high = 1.5; // m
};

// Signed angle from the robot heading to the goal direction, in (-pi, pi];
// positive when the goal lies to the robot's left. Zero when the robot is
// at the goal.
double heading_error(const sim::RobotState& state, const GoalSpec& goal);

// a = min(bins 0-6), b = min(bins 7-12), c = min(bins 13-19).
SectorDistances sectorize(const sim::DepthScan& scan);

double fusion_weight(const FusionPolicy& policy, const sim::DepthScan& scan);

// Componentwise x*tracking + (1-x)*avoidance, clamped to the base limits.
sim::VelocityCommand fuse(const sim::VelocityCommand& tflc_cmd,
                          const sim::VelocityCommand& oaflc_cmd, double x);

// Everything one control evaluation produced, for logging.
struct ControlDecision {
    sim::VelocityCommand command;
    sim::VelocityCommand tflc_command;
    sim::VelocityCommand oaflc_command;
    double fusion_x = 1.0;
};

// Tracking and obstacle-avoidance controllers plus their fusion. Holds the
// two validated inference systems; immutable and safe to share between
// concurrently running scenarios.
class NavigationController {
public:
    // Systems must expose the expected variables: tracking (dist, heading),
    // avoidance (a, b, c), both with outputs (v, omega).
    NavigationController(fuzzy::FuzzyInferenceSystem tflc, fuzzy::FuzzyInferenceSystem oaflc);

    static NavigationController with_default_rules();
    static NavigationController from_files(const std::string& tflc_path,
                                           const std::string& oaflc_path);

    sim::VelocityCommand tflc(const sim::RobotState& state, const GoalSpec& goal) const;
    sim::VelocityCommand oaflc(const SectorDistances& sectors) const;

    ControlDecision control_step(const sim::RobotState& state, const GoalSpec& goal,
                                 const sim::DepthScan& scan, const FusionPolicy& policy) const;

    const fuzzy::FuzzyInferenceSystem& tflc_system() const { return tflc_; }
    const fuzzy::FuzzyInferenceSystem& oaflc_system() const { return oaflc_; }

private:
    fuzzy::FuzzyInferenceSystem tflc_;
    fuzzy::FuzzyInferenceSystem oaflc_;
};

// Rule definitions compiled in from the shipped .fis files.
const std::string& default_tflc_rules();
const std::string& default_oaflc_rules();

} // namespace fuzznav::control
