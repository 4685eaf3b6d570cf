#pragma once

#include "biorder/selftest.hpp"

namespace biorder::checks {

CheckResult ml_value_at_zero(double alpha, double beta);
CheckResult ml_integral_agreement(double alpha, double beta);
CheckResult ml_seam(double alpha, double beta);
CheckResult kernel_positivity(double alpha, double beta);
CheckResult primitive_quadrature(double alpha, double beta);
CheckResult primitive_derivative(double alpha, double beta);
CheckResult primitive_monotone(double alpha, double beta);
CheckResult closed_form_dual(double alpha, double beta);
CheckResult ac_constants(double alpha, double beta);
CheckResult operator_linearity(double alpha, double beta);
CheckResult theorem1_bound(double alpha, double beta);
CheckResult theorem3_commutation(double alpha, double beta);
CheckResult reflection(double alpha, double beta);
CheckResult laplace_series_bound(double alpha, double beta);
CheckResult sumudu_duality(double alpha, double beta);

}  // namespace biorder::checks
