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

#include "fmet/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fmet {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

Complex unit_phase(double theta) {  // e^{-i theta}
  return Complex(std::cos(theta), -std::sin(theta));
}

Complex i_pow(int n) {  // i^n
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

Complex minus_i_pow(int n) { return i_pow(-n); }  // (-i)^n = i^{-n}

// Shared kernel so that ft_derivative at beta = 0 reproduces ft_eval bitwise.
Complex discrete_sum(const ComplexMeasure& mu, const MultiIndex* beta,
                     std::span<const double> xi) {
  Complex s{};
  for (const Atom& a : mu.atoms()) {
    Complex term = a.weight * unit_phase(dot(a.position, xi));
    if (beta) term *= monomial(a.position, *beta);
    s += term;
  }
  return s;
}

Complex grid_sum(const ComplexMeasure& mu, const MultiIndex* beta, std::span<const double> xi) {
  const GridSpec& g = mu.grid_spec();
  const auto& rho = mu.density();
  Complex s{};
  std::vector<double> x;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    x = g.point(i);
    Complex term = rho[i] * (g.quad_weight(i) * unit_phase(dot(x, xi)));
    if (beta) term *= monomial(x, *beta);
    s += term;
  }
  return s;
}

}  // namespace

Complex ft_eval(const ComplexMeasure& mu, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != mu.dim()) {
    throw std::invalid_argument("ft_eval: frequency dimension does not match measure");
  }
  switch (mu.kind()) {
    case ComplexMeasure::Kind::Discrete:
      return discrete_sum(mu, nullptr, xi);
    case ComplexMeasure::Kind::Grid:
      return grid_sum(mu, nullptr, xi);
    case ComplexMeasure::Kind::Spectral:
    default:
      return mu.evaluator()(xi);
  }
}

Complex ft_derivative(const ComplexMeasure& mu, const MultiIndex& beta,
                      std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != mu.dim() || beta.dim() != mu.dim()) {
    throw std::invalid_argument("ft_derivative: dimension mismatch");
  }
  if (mu.kind() == ComplexMeasure::Kind::Spectral) {
    throw std::invalid_argument(
        "ft_derivative: spectral measures are not supported; differentiate the "
        "evaluator with fd_partial_at_zero instead");
  }
  Complex integral = mu.kind() == ComplexMeasure::Kind::Discrete ? discrete_sum(mu, &beta, xi)
                                                                 : grid_sum(mu, &beta, xi);
  return minus_i_pow(beta.order()) * integral;
}

Complex fd_partial_at_zero(const SpectralEvaluator& phi, const MultiIndex& beta, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("fd_partial_at_zero: step must be positive and finite");
  }
  int d = beta.dim();
  std::vector<double> xi(static_cast<std::size_t>(d), 0.0);
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  Complex total{};
  // Tensor product of 1-D central stencils: offsets (beta_j/2 - k_j) h with
  // weights (-1)^{k_j} C(beta_j, k_j).
  while (true) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      int bj = beta[j];
      int kj = k[static_cast<std::size_t>(j)];
      double cjk = 1.0;
      for (int i = 1; i <= kj; ++i) cjk = cjk * (bj - kj + i) / i;
      w *= (kj % 2 == 0 ? 1.0 : -1.0) * cjk;
      xi[static_cast<std::size_t>(j)] = (0.5 * bj - kj) * step;
    }
    total += w * phi(xi);
    int j = d - 1;
    while (j >= 0 && k[static_cast<std::size_t>(j)] == beta[j]) {
      k[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++k[static_cast<std::size_t>(j)];
  }
  return total / std::pow(step, beta.order());
}

Complex moment_from_ft(const SpectralEvaluator& phi, const MultiIndex& beta, double step) {
  return i_pow(beta.order()) * fd_partial_at_zero(phi, beta, step);
}

double default_fd_step(int order) {
  return std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (order + 2));
}

namespace {

// out[..., x, ...] = sum_k in[..., k, ...] * table[k * nx + x] along one axis.
std::vector<Complex> contract_axis(const std::vector<Complex>& in, std::vector<std::size_t>& dims,
                                   std::size_t axis, const std::vector<Complex>& table,
                                   std::size_t nx) {
  std::size_t nk = dims[axis];
  std::size_t inner = 1, outer = 1;
  for (std::size_t j = axis + 1; j < dims.size(); ++j) inner *= dims[j];
  for (std::size_t j = 0; j < axis; ++j) outer *= dims[j];
  std::vector<Complex> out(outer * nx * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t k = 0; k < nk; ++k) {
      const Complex* src = in.data() + (o * nk + k) * inner;
      for (std::size_t x = 0; x < nx; ++x) {
        Complex e = table[k * nx + x];
        Complex* dst = out.data() + (o * nx + x) * inner;
        for (std::size_t i = 0; i < inner; ++i) dst[i] += e * src[i];
      }
    }
  }
  dims[axis] = nx;
  return out;
}

}  // namespace

ComplexMeasure inverse_ft_grid(const SpectralEvaluator& phi, const GridSpec& grid,
                               const InverseFtOptions& options) {
  grid.validate();
  const int d = grid.dim();
  const double radius = options.truncation_radius;
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("inverse_ft_grid: truncation radius must be positive");
  }
  if (!(options.oversample >= 1.0)) {
    throw std::invalid_argument("inverse_ft_grid: oversample must be >= 1");
  }

  // Per-axis frequency nodes: spacing at most pi / (oversample * |x|_max)
  // keeps the periodic images of the quadrature outside the spatial window.
  std::vector<std::vector<double>> nodes(static_cast<std::size_t>(d));
  std::vector<std::vector<double>> weights(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    auto js = static_cast<std::size_t>(j);
    double lo = grid.origin[js];
    double hi = grid.origin[js] + grid.spacing[js] * (grid.shape[js] - 1);
    double xmax = std::max({std::abs(lo), std::abs(hi), grid.spacing[js]});
    double target = std::numbers::pi / (options.oversample * xmax);
    int n = 2 * static_cast<int>(std::ceil(radius / target)) + 1;
    n = std::max(n, options.min_nodes_per_axis | 1);
    double dxi = 2.0 * radius / (n - 1);
    nodes[js].resize(static_cast<std::size_t>(n));
    weights[js].resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      nodes[js][static_cast<std::size_t>(k)] = -radius + k * dxi;
      weights[js][static_cast<std::size_t>(k)] = (k == 0 || k == n - 1) ? 0.5 * dxi : dxi;
    }
  }

  // Weighted samples of phi on the frequency box, with a decay check on the
  // box boundary.
  std::vector<std::size_t> dims(static_cast<std::size_t>(d));
  std::size_t total = 1;
  for (int j = 0; j < d; ++j) {
    dims[static_cast<std::size_t>(j)] = nodes[static_cast<std::size_t>(j)].size();
    total *= dims[static_cast<std::size_t>(j)];
  }
  std::vector<Complex> tensor(total);
  std::vector<double> xi(static_cast<std::size_t>(d));
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  double max_abs = 0.0, max_boundary = 0.0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    bool boundary = false;
    for (int j = 0; j < d; ++j) {
      auto js = static_cast<std::size_t>(j);
      xi[js] = nodes[js][idx[js]];
      w *= weights[js][idx[js]];
      boundary = boundary || idx[js] == 0 || idx[js] + 1 == dims[js];
    }
    Complex v = phi(xi);
    double a = std::abs(v);
    max_abs = std::max(max_abs, a);
    if (boundary) max_boundary = std::max(max_boundary, a);
    tensor[flat] = w * v;
    for (int j = d - 1; j >= 0; --j) {
      auto js = static_cast<std::size_t>(j);
      if (++idx[js] < dims[js]) break;
      idx[js] = 0;
    }
  }
  if (max_boundary > options.boundary_decay_tol * max_abs) {
    throw std::invalid_argument(
        "inverse_ft_grid: phi has not decayed at the truncation radius; enlarge it");
  }

  // Replace each frequency axis with the corresponding spatial axis.
  for (int j = 0; j < d; ++j) {
    auto js = static_cast<std::size_t>(j);
    std::size_t nx = static_cast<std::size_t>(grid.shape[js]);
    std::vector<Complex> table(nodes[js].size() * nx);
    for (std::size_t k = 0; k < nodes[js].size(); ++k) {
      for (std::size_t x = 0; x < nx; ++x) {
        double pos = grid.origin[js] + grid.spacing[js] * static_cast<double>(x);
        double theta = nodes[js][k] * pos;
        table[k * nx + x] = Complex(std::cos(theta), std::sin(theta));  // e^{+i xi x}
      }
    }
    tensor = contract_axis(tensor, dims, js, table, nx);
  }

  double scale = std::pow(2.0 * std::numbers::pi, -d);
  for (Complex& v : tensor) v *= scale;
  return ComplexMeasure::grid(grid, std::move(tensor));
}

}  // namespace fmet
