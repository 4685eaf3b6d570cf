#include "biorder/grid.hpp"

#include "biorder/errors.hpp"

#include <cmath>
#include <string>

namespace biorder {

Grid::Grid(double start, double end, int n_intervals)
    : start_(start), end_(end), n_(n_intervals), step_(0.0)
{
    if (!std::isfinite(start) || !std::isfinite(end) || !(end > start)) {
        throw GridError("grid: need finite start < end, got [" + std::to_string(start) + ", " +
                        std::to_string(end) + "]");
    }
    if (n_intervals < 1) {
        throw GridError("grid: need at least one interval, got " + std::to_string(n_intervals));
    }
    step_ = (end - start) / n_intervals;
}

double Grid::node(int i) const
{
    if (i < 0 || i > n_) {
        throw IndexError("grid: node index " + std::to_string(i) + " outside [0, " +
                         std::to_string(n_) + "]");
    }
    if (i == n_) {
        return end_;
    }
    return start_ + i * step_;
}

std::vector<double> Grid::nodes() const
{
    std::vector<double> out(static_cast<std::size_t>(node_count()));
    for (int i = 0; i <= n_; ++i) {
        out[static_cast<std::size_t>(i)] = node(i);
    }
    return out;
}

namespace {

void require_finite(const std::vector<double>& v, const char* what)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw DomainError(std::string(what) + ": non-finite sample at index " +
                              std::to_string(i));
        }
    }
}

}  // namespace

SampledFunction::SampledFunction(Grid g, std::vector<double> v) : grid(g), values(std::move(v))
{
    if (values.size() != static_cast<std::size_t>(grid.node_count())) {
        throw GridError("sampled function: " + std::to_string(values.size()) +
                        " values for a grid of " + std::to_string(grid.node_count()) + " nodes");
    }
    require_finite(values, "sampled function");
}

SampledFunction SampledFunction::sample(const Grid& g, const std::function<double(double)>& f)
{
    std::vector<double> v(static_cast<std::size_t>(g.node_count()));
    for (int i = 0; i <= g.n_intervals(); ++i) {
        v[static_cast<std::size_t>(i)] = f(g.node(i));
    }
    return SampledFunction(g, std::move(v));
}

SampledField::SampledField(Grid gx, Grid gt, std::vector<double> v)
    : x_grid(gx), t_grid(gt), values(std::move(v))
{
    const std::size_t expected =
        static_cast<std::size_t>(x_grid.node_count()) * static_cast<std::size_t>(t_grid.node_count());
    if (values.size() != expected) {
        throw GridError("sampled field: " + std::to_string(values.size()) + " values for a " +
                        std::to_string(x_grid.node_count()) + " x " +
                        std::to_string(t_grid.node_count()) + " grid");
    }
    require_finite(values, "sampled field");
}

SampledField SampledField::sample(const Grid& gx, const Grid& gt,
                                  const std::function<double(double, double)>& f)
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(gx.node_count()) * gt.node_count());
    for (int it = 0; it <= gt.n_intervals(); ++it) {
        for (int ix = 0; ix <= gx.n_intervals(); ++ix) {
            v.push_back(f(gx.node(ix), gt.node(it)));
        }
    }
    return SampledField(gx, gt, std::move(v));
}

std::vector<double> SampledField::row(int it) const
{
    if (it < 0 || it > t_grid.n_intervals()) {
        throw IndexError("sampled field: t index " + std::to_string(it) + " out of range");
    }
    const auto begin = values.begin() + static_cast<std::ptrdiff_t>(it) * x_grid.node_count();
    return std::vector<double>(begin, begin + x_grid.node_count());
}

}  // namespace biorder
