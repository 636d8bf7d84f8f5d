#pragma once

#include <stdexcept>

namespace fuzznav::fuzzy {

// Piecewise-linear fuzzy set over a real universe. Triangles are stored as
// trapezoids with a collapsed plateau (b == c); the declared shape is kept so
// a formatted definition round-trips exactly.
class MembershipFunction {
public:
    enum class Shape { Triangular, Trapezoidal };

    static MembershipFunction triangular(double a, double b, double c);
    static MembershipFunction trapezoidal(double a, double b, double c, double d);

    // Degree in [0, 1]; 1 on the plateau, 0 outside [a, d]. Degenerate
    // parameters (a == b == c == d) evaluate as a crisp singleton.
    double evaluate(double x) const;

    Shape shape() const { return shape_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    bool operator==(const MembershipFunction&) const = default;

private:
    MembershipFunction(Shape shape, double a, double b, double c, double d);

    Shape shape_;
    double a_, b_, c_, d_;
};

} // namespace fuzznav::fuzzy
