#include "fuzznav/sim/world.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace fuzznav::sim {

namespace {

double rect_signed_distance(const Rect& rect, double x, double y)
{
    const double dx = std::max({rect.xmin - x, 0.0, x - rect.xmax});
    const double dy = std::max({rect.ymin - y, 0.0, y - rect.ymax});
    if (dx > 0.0 || dy > 0.0)
        return std::hypot(dx, dy);
    // Inside: negative distance to the nearest edge.
    const double inner = std::min({x - rect.xmin, rect.xmax - x, y - rect.ymin, rect.ymax - y});
    return -inner;
}

struct LineReader {
    std::istringstream stream;
    std::string source_name;
    int line_no = 0;
    std::string line;

    bool next()
    {
        while (std::getline(stream, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.resize(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        std::ostringstream os;
        os << source_name << ':' << line_no << ": " << message;
        throw WorldError(os.str());
    }
};

} // namespace

double signed_distance(const Obstacle& obstacle, double x, double y)
{
    if (const Circle* circle = std::get_if<Circle>(&obstacle))
        return std::hypot(x - circle->cx, y - circle->cy) - circle->r;
    return rect_signed_distance(std::get<Rect>(obstacle), x, y);
}

double clearance(const World& world, const RobotState& state)
{
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& obstacle : world.obstacles)
        nearest = std::min(nearest, signed_distance(obstacle, state.x, state.y));
    if (world.bounds) {
        // Distance to the arena boundary from inside; negative once outside.
        nearest = std::min(nearest, -rect_signed_distance(*world.bounds, state.x, state.y));
    }
    return nearest - kBodyRadius;
}

bool in_collision(const World& world, const RobotState& state)
{
    return clearance(world, state) < 0.0;
}

bool point_inside_obstacle(const World& world, double x, double y)
{
    for (const auto& obstacle : world.obstacles)
        if (signed_distance(obstacle, x, y) < 0.0)
            return true;
    return false;
}

World parse_world(const std::string& source, const std::string& source_name)
{
    World world;
    LineReader reader{std::istringstream(source), source_name};
    while (reader.next()) {
        std::istringstream tokens(reader.line);
        std::string keyword;
        tokens >> keyword;
        const auto read_numbers = [&](int count, double* out) {
            for (int i = 0; i < count; ++i)
                if (!(tokens >> out[i]))
                    reader.fail("expected " + std::to_string(count) + " numbers after '"
                                + keyword + "'");
            std::string extra;
            if (tokens >> extra)
                reader.fail("unexpected trailing token '" + extra + "'");
        };
        if (keyword == "circle") {
            double p[3];
            read_numbers(3, p);
            if (!(p[2] > 0.0))
                reader.fail("circle radius must be positive");
            world.obstacles.push_back(Circle{p[0], p[1], p[2]});
        } else if (keyword == "rect") {
            double p[4];
            read_numbers(4, p);
            if (!(p[0] < p[2] && p[1] < p[3]))
                reader.fail("rectangle must have positive area");
            world.obstacles.push_back(Rect{p[0], p[1], p[2], p[3]});
        } else if (keyword == "bounds") {
            if (world.bounds)
                reader.fail("bounds declared twice");
            double p[4];
            read_numbers(4, p);
            if (!(p[0] < p[2] && p[1] < p[3]))
                reader.fail("bounds must have positive area");
            world.bounds = Rect{p[0], p[1], p[2], p[3]};
        } else {
            reader.fail("unknown keyword '" + keyword + "'");
        }
    }
    if (world.bounds) {
        for (const auto& obstacle : world.obstacles) {
            bool inside = true;
            if (const Circle* c = std::get_if<Circle>(&obstacle))
                inside = c->cx - c->r >= world.bounds->xmin && c->cx + c->r <= world.bounds->xmax
                    && c->cy - c->r >= world.bounds->ymin && c->cy + c->r <= world.bounds->ymax;
            else if (const Rect* r = std::get_if<Rect>(&obstacle))
                inside = r->xmin >= world.bounds->xmin && r->xmax <= world.bounds->xmax
                    && r->ymin >= world.bounds->ymin && r->ymax <= world.bounds->ymax;
            if (!inside)
                throw WorldError(source_name + ": obstacle lies outside the declared bounds");
        }
    }
    return world;
}

World load_world(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw WorldError("cannot open world file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_world(buffer.str(), path);
}

} // namespace fuzznav::sim
