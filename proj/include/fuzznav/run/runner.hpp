#pragma once

#include "fuzznav/control/controller.hpp"
#include "fuzznav/sim/world.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzznav::run {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    sim::World world;
    sim::RobotState start;
    control::GoalSpec goal;
    double dt = 0.05;       // s
    double max_time = 120.0; // s
    control::FusionPolicy fusion;
};

// One control evaluation: the pose at time t, the sensing summary, and the
// command applied over [t, t+dt). The final row carries the terminal pose
// with a computed-but-unapplied command (zeroed, with min_range 0, when the
// run ended in collision).
struct TrajectoryRow {
    double t = 0.0;
    double x = 0.0, y = 0.0, theta = 0.0;
    double v = 0.0, omega = 0.0;
    double x_weight = 1.0;
    double pos_err = 0.0;
    double min_range = 0.0;
    double v_tflc = 0.0, omega_tflc = 0.0;
    double v_oaflc = 0.0, omega_oaflc = 0.0;
};

struct TrajectoryRecord {
    std::vector<TrajectoryRow> rows;
};

enum class Verdict { Reached, Collision, Timeout };

std::string to_string(Verdict verdict);

struct ScenarioOutcome {
    Verdict verdict = Verdict::Timeout;
    double elapsed = 0.0;       // s
    double path_length = 0.0;   // m
    double min_clearance = 0.0; // m
    double final_error = 0.0;   // m
};

// Validates config invariants; throws ScenarioError listing the problem.
void check_config(const ScenarioConfig& config);

// Closed-loop scenario execution at fixed dt: scan, decide, integrate until
// the goal is reached, the body touches an obstacle, or time runs out.
// Deterministic: equal configs produce identical records.
std::pair<TrajectoryRecord, ScenarioOutcome> run(const control::NavigationController& controller,
                                                 const ScenarioConfig& config);

// Aggregates a record: path length from consecutive displacements, clearance
// against the world, final error against the goal.
ScenarioOutcome metrics(const TrajectoryRecord& record, const control::GoalSpec& goal,
                        const sim::World& world, Verdict verdict);

// Normative trajectory CSV: fixed header, one row per control step, LF line
// endings, 12 significant digits.
void write_csv(const TrajectoryRecord& record, std::ostream& sink);
std::string to_csv(const TrajectoryRecord& record);

// Line-oriented scenario format:
//   world <path>        (resolved relative to the scenario file)
//   start <x> <y> <theta>
//   goal <x> <y>
//   dt <s>
//   max_time <s>
//   fusion <d_low> <d_high>
ScenarioConfig load_scenario(const std::string& path);

} // namespace fuzznav::run
