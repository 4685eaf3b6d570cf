#pragma once

namespace biorder {

enum class TruncationMode {
    convergent,     ///< sum until terms fall below the floor, fail otherwise
    smallest_term,  ///< stop at the minimal term of an asymptotic series
};

/// Policy shared by every infinite or asymptotic series in the library.
struct SeriesTruncation {
    int max_terms = 200;
    double abs_floor = 0.0;  ///< stop once |term| < abs_floor
    TruncationMode mode = TruncationMode::convergent;

    void validate() const;
};

/// Value of a truncated series together with its error budget.
///
/// `truncation_error` is the magnitude of the first omitted term.
/// `err_estimate` adds a floating-point rounding bound for the retained
/// terms, so it is the figure to compare against an independent reference.
struct SeriesResult {
    double value = 0.0;
    double err_estimate = 0.0;
    double truncation_error = 0.0;
    int terms = 0;
    bool converged = true;
};

}  // namespace biorder
