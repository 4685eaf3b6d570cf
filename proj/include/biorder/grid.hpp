#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace biorder {

/// Uniform partition of [start, end] into n_intervals cells.
class Grid {
public:
    Grid(double start, double end, int n_intervals);

    double start() const { return start_; }
    double end() const { return end_; }
    int n_intervals() const { return n_; }
    int node_count() const { return n_ + 1; }
    double step() const { return step_; }

    /// start + i * step, with node(N) == end exactly.
    double node(int i) const;
    std::vector<double> nodes() const;

    bool operator==(const Grid& other) const = default;

private:
    double start_;
    double end_;
    int n_;
    double step_;
};

/// Values of a function at the nodes of a grid.
struct SampledFunction {
    Grid grid;
    std::vector<double> values;

    SampledFunction(Grid g, std::vector<double> v);

    static SampledFunction sample(const Grid& g, const std::function<double(double)>& f);
};

/// Values of f(x, t) on x_grid x t_grid, stored row-major with t as the
/// outer index: values[it * x_grid.node_count() + ix].
struct SampledField {
    Grid x_grid;
    Grid t_grid;
    std::vector<double> values;

    SampledField(Grid gx, Grid gt, std::vector<double> v);

    static SampledField sample(const Grid& gx, const Grid& gt,
                               const std::function<double(double, double)>& f);

    double at(int ix, int it) const
    {
        return values[static_cast<std::size_t>(it) * x_grid.node_count() + ix];
    }
    double& at(int ix, int it)
    {
        return values[static_cast<std::size_t>(it) * x_grid.node_count() + ix];
    }

    /// Row of x-samples at fixed t index.
    std::vector<double> row(int it) const;
};

}  // namespace biorder
