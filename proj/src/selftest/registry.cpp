#include "biorder/selftest.hpp"
#include "checks.hpp"

#include <exception>
#include <limits>

namespace biorder {

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = {
        {"ml_value_at_zero", "E_{beta,gamma}(0) = 1/Gamma(gamma)", checks::ml_value_at_zero},
        {"ml_integral_agreement", "Mittag-Leffler vs its integral representation",
         checks::ml_integral_agreement},
        {"ml_seam", "series and asymptotic branches agree at the crossover", checks::ml_seam},
        {"kernel_positivity", "kernel > 0 on (1e-4, 1e2)", checks::kernel_positivity},
        {"primitive_quadrature", "kernel_primitive vs singular quadrature",
         checks::primitive_quadrature},
        {"primitive_derivative", "P'(y) = k(y) by central differences",
         checks::primitive_derivative},
        {"primitive_monotone", "P strictly increasing", checks::primitive_monotone},
        {"closed_form_dual", "closed-form A.C of t equals C P(t)", checks::closed_form_dual},
        {"ac_constants", "A.C of a constant vanishes", checks::ac_constants},
        {"operator_linearity", "A.C, A.R and right-sided operators are linear",
         checks::operator_linearity},
        {"theorem1_bound", "sup |A.C f| <= C sup|slope| P(T)", checks::theorem1_bound},
        {"mixed_commutation", "mixed A.C operator independent of summation order",
         checks::theorem3_commutation},
        {"reflection", "right-sided operator of f equals minus left-sided of f(H - t)",
         checks::reflection},
        {"laplace_series_bound", "smallest-term Laplace series within its error estimate",
         checks::laplace_series_bound},
        {"sumudu_duality", "S(g)(u) = L(g)(1/u) / u", checks::sumudu_duality},
    };
    return registry;
}

std::vector<std::pair<double, double>> selftest_lattice()
{
    static const double axis[] = {0.1, 0.25, 0.5, 0.75, 0.9};
    std::vector<std::pair<double, double>> out;
    for (double a : axis) {
        for (double b : axis) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

SelftestReport selftest_suite()
{
    SelftestReport report;
    for (const CheckSpec& spec : check_registry()) {
        for (const auto& [alpha, beta] : selftest_lattice()) {
            CheckResult r;
            try {
                r = spec.run(alpha, beta);
            } catch (const std::exception& e) {
                r.alpha = alpha;
                r.beta = beta;
                r.worst_error = std::numeric_limits<double>::infinity();
                r.pass = false;
                r.note = e.what();
            }
            r.id = spec.id;
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

}  // namespace biorder
