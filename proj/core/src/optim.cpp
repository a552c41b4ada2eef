#include "teich/optim.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace teich {

namespace {

struct Vertex {
    double x, y, v;
};

} // namespace

SimplexResult nelder_mead(const std::function<double(double, double)>& f, double x0, double y0,
                          double step_x, double step_y, int max_iters) {
    SimplexResult res;
    auto eval = [&](double x, double y) {
        ++res.evals;
        return f(x, y);
    };
    std::array<Vertex, 3> s = {Vertex{x0, y0, eval(x0, y0)},
                               Vertex{x0 + step_x, y0, eval(x0 + step_x, y0)},
                               Vertex{x0, y0 + step_y, eval(x0, y0 + step_y)}};
    auto order = [&] { std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v < b.v; }); };
    order();
    res.trace.push_back({{s[0].x, s[0].y}, s[0].v});

    for (int it = 0; it < max_iters; ++it) {
        double cx = (s[0].x + s[1].x) / 2.0, cy = (s[0].y + s[1].y) / 2.0;
        double rx = cx + (cx - s[2].x), ry = cy + (cy - s[2].y);
        double rv = eval(rx, ry);
        if (rv < s[0].v) {
            double ex = cx + 2.0 * (cx - s[2].x), ey = cy + 2.0 * (cy - s[2].y);
            double ev = eval(ex, ey);
            s[2] = ev < rv ? Vertex{ex, ey, ev} : Vertex{rx, ry, rv};
        } else if (rv < s[1].v) {
            s[2] = {rx, ry, rv};
        } else {
            double kx = cx + 0.5 * (s[2].x - cx), ky = cy + 0.5 * (s[2].y - cy);
            double kv = eval(kx, ky);
            if (kv < s[2].v) {
                s[2] = {kx, ky, kv};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].y = s[0].y + 0.5 * (s[i].y - s[0].y);
                    s[i].v = eval(s[i].x, s[i].y);
                }
            }
        }
        order();
        if (res.trace.empty() || s[0].v < res.trace.back().second)
            res.trace.push_back({{s[0].x, s[0].y}, s[0].v});
        double spread = std::fabs(s[2].v - s[0].v);
        double size = std::hypot(s[2].x - s[0].x, s[2].y - s[0].y) + std::hypot(s[1].x - s[0].x, s[1].y - s[0].y);
        if (spread < 1e-12 && size < 1e-10) break;
    }
    res.x = s[0].x;
    res.y = s[0].y;
    res.value = s[0].v;
    return res;
}

} // namespace teich
