/*
 * Copyright 2026 The fmet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FMET_FOURIER_HPP
#define FMET_FOURIER_HPP

#include <span>

#include "fmet/measure.hpp"

namespace fmet {

/// mu_hat(xi) = integral of e^{-i x.xi} d mu(x). Exact finite sum for
/// Discrete, trapezoidal quadrature for Grid, evaluator call for Spectral.
Complex ft_eval(const ComplexMeasure& mu, std::span<const double> xi);

/// (D^beta mu_hat)(xi) = (-i)^{|beta|} integral of x^beta e^{-i x.xi} d mu(x).
/// Discrete and Grid only; Spectral inputs are rejected (std::invalid_argument).
/// At beta = 0 this coincides with ft_eval exactly.
Complex ft_derivative(const ComplexMeasure& mu, const MultiIndex& beta,
                      std::span<const double> xi);

/// Central finite-difference estimate of (D^beta phi)(0) at step h > 0,
/// mixed partials by tensor-product stencils (order-2 accuracy per axis).
Complex fd_partial_at_zero(const SpectralEvaluator& phi, const MultiIndex& beta, double step);

/// i^{|beta|} times fd_partial_at_zero: the beta-moment of the measure whose
/// transform is phi, estimated from frequency-side samples alone.
Complex moment_from_ft(const SpectralEvaluator& phi, const MultiIndex& beta, double step);

/// Default step balancing truncation against cancellation for a derivative
/// of the given total order: eps^(1/(order+2)).
double default_fd_step(int order);

struct InverseFtOptions {
  /// Half-width of the frequency box [-R, R]^d the caller asserts phi to
  /// effectively live in.
  double truncation_radius;
  /// Frequency spacing is pi / (oversample * |x|_max) per axis.
  double oversample = 2.0;
  /// Largest tolerated |phi| on the boundary of the frequency box, relative
  /// to the largest sampled |phi|; violations throw.
  double boundary_decay_tol = 1e-10;
  int min_nodes_per_axis = 33;
};

/// Samples (2 pi)^{-d} * integral of phi(xi) e^{i xi.x} d xi on the requested
/// spatial grid by truncated trapezoidal quadrature, evaluated axis-by-axis.
/// Returns the result as a Grid measure.
ComplexMeasure inverse_ft_grid(const SpectralEvaluator& phi, const GridSpec& grid,
                               const InverseFtOptions& options);

}  // namespace fmet

#endif  // FMET_FOURIER_HPP
