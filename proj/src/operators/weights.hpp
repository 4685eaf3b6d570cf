#pragma once

// Shared building blocks of the grid operators: tables of kernel primitives
// and cell weights on a uniform step, and the cell-value A.R core.

#include "biorder/operators.hpp"

#include <string>
#include <vector>

namespace biorder::detail {

/// P(k * step) for k = 0..count.
class PrimitiveTable {
public:
    PrimitiveTable(const BiOrder& order, double step, int count, const SeriesTruncation& trunc);

    double operator[](int k) const { return p_[static_cast<std::size_t>(k)]; }
    double step() const { return step_; }
    int count() const { return static_cast<int>(p_.size()) - 1; }
    double max_error() const { return max_err_; }

private:
    std::vector<double> p_;
    double step_;
    double max_err_ = 0.0;
};

/// delta_k = weight of the cell whose far edge is k steps from the node,
/// k = 1..count (entry 0 unused), plus the slope scaling of the scheme.
struct WeightTable {
    std::vector<double> w;
    double slope_scale = 1.0;
    double max_error = 0.0;  ///< per-weight error bound
    std::vector<std::string> warnings;
};

WeightTable make_weights(const BiOrder& order, double step, int count, Scheme scheme,
                         const SeriesTruncation& trunc);

/// Paper-literal weight for the cell [t_i, t_{i+1}] with t_n - t_i = k step.
double literal_weight(const BiOrder& order, double step, int k);

/// Left-sided A.R node values from cell values c_0..c_{N-1}.
std::vector<double> ar_left_from_cells(const std::vector<double>& cells, const BiOrder& order,
                                       const PrimitiveTable& table);

/// Left-sided A.C node values from slopes (already scaled).
std::vector<double> ac_left_from_slopes(const std::vector<double>& slopes, double prefactor,
                                        const WeightTable& weights);

std::vector<double> forward_slopes(const std::vector<double>& values, double step, double scale);

std::vector<double> cell_means(const std::vector<double>& values);

}  // namespace biorder::detail
