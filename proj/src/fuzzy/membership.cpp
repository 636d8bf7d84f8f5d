#include "fuzznav/fuzzy/membership.hpp"

#include <cmath>

namespace fuzznav::fuzzy {

MembershipFunction::MembershipFunction(Shape shape, double a, double b, double c, double d)
    : shape_(shape), a_(a), b_(b), c_(c), d_(d)
{
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
        throw std::invalid_argument("membership function parameters must be finite");
    if (!(a <= b && b <= c && c <= d))
        throw std::invalid_argument("membership function parameters must be ordered");
}

MembershipFunction MembershipFunction::triangular(double a, double b, double c)
{
    return MembershipFunction(Shape::Triangular, a, b, b, c);
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d)
{
    return MembershipFunction(Shape::Trapezoidal, a, b, c, d);
}

double MembershipFunction::evaluate(double x) const
{
    if (x < a_ || x > d_)
        return 0.0;
    if (x >= b_ && x <= c_)
        return 1.0;
    if (x < b_) {
        // a_ < b_ here, otherwise the plateau branch caught x.
        return (x - a_) / (b_ - a_);
    }
    return (d_ - x) / (d_ - c_);
}

} // namespace fuzznav::fuzzy
