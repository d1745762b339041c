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

#include "fmet/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fmet {

MomentSpec::MomentSpec(int dim, int order,
                       const std::vector<std::pair<MultiIndex, Complex>>& values)
    : dim_(dim), order_(order) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("MomentSpec: dimension must be in {1,2,3}");
  if (order < 2) throw std::invalid_argument("MomentSpec: order must be >= 2");
  indices_ = enumerate_upto(dim, order);
  values_.assign(indices_.size(), Complex{});
  std::vector<bool> seen(indices_.size(), false);
  for (const auto& [beta, v] : values) {
    if (beta.dim() != dim) {
      throw std::invalid_argument("MomentSpec: index " + beta.to_string() + " has wrong dimension");
    }
    if (beta.order() > order) {
      throw std::invalid_argument("MomentSpec: index " + beta.to_string() +
                                  " exceeds the declared order");
    }
    auto it = std::lower_bound(indices_.begin(), indices_.end(), beta, graded_lex_less);
    std::size_t pos = static_cast<std::size_t>(it - indices_.begin());
    if (seen[pos]) {
      throw std::invalid_argument("MomentSpec: duplicate index " + beta.to_string());
    }
    seen[pos] = true;
    values_[pos] = v;
  }
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (!seen[k]) {
      throw std::invalid_argument("MomentSpec: missing value for index " +
                                  indices_[k].to_string());
    }
  }
}

const Complex& MomentSpec::value(const MultiIndex& beta) const {
  if (beta.dim() != dim_) throw std::invalid_argument("MomentSpec: index dimension mismatch");
  if (beta.order() > order_) {
    throw std::out_of_range("moment " + beta.to_string() + " queried beyond declared order " +
                            std::to_string(order_));
  }
  auto it = std::lower_bound(indices_.begin(), indices_.end(), beta, graded_lex_less);
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

std::size_t GridSpec::size() const noexcept {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

std::vector<double> GridSpec::point(std::size_t flat) const {
  std::vector<double> x(shape.size());
  for (int j = dim() - 1; j >= 0; --j) {
    std::size_t n = static_cast<std::size_t>(shape[static_cast<std::size_t>(j)]);
    std::size_t idx = flat % n;
    flat /= n;
    x[static_cast<std::size_t>(j)] = origin[static_cast<std::size_t>(j)] +
                                     spacing[static_cast<std::size_t>(j)] * static_cast<double>(idx);
  }
  return x;
}

double GridSpec::quad_weight(std::size_t flat) const {
  double w = 1.0;
  for (int j = dim() - 1; j >= 0; --j) {
    std::size_t n = static_cast<std::size_t>(shape[static_cast<std::size_t>(j)]);
    std::size_t idx = flat % n;
    flat /= n;
    double wj = spacing[static_cast<std::size_t>(j)];
    if (n > 1 && (idx == 0 || idx == n - 1)) wj *= 0.5;
    w *= wj;
  }
  return w;
}

void GridSpec::validate() const {
  int d = dim();
  if (d < 1 || d > 3) throw std::invalid_argument("GridSpec: dimension must be in {1,2,3}");
  if (static_cast<int>(origin.size()) != d || static_cast<int>(spacing.size()) != d) {
    throw std::invalid_argument("GridSpec: origin/spacing/shape lengths differ");
  }
  for (int j = 0; j < d; ++j) {
    if (!(spacing[static_cast<std::size_t>(j)] > 0.0)) {
      throw std::invalid_argument("GridSpec: spacing must be positive");
    }
    if (shape[static_cast<std::size_t>(j)] < 1) {
      throw std::invalid_argument("GridSpec: shape entries must be >= 1");
    }
  }
}

ComplexMeasure ComplexMeasure::discrete(int dim, std::vector<Atom> atoms) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("measure dimension must be in {1,2,3}");
  for (const Atom& a : atoms) {
    if (static_cast<int>(a.position.size()) != dim) {
      throw std::invalid_argument("atom position dimension does not match measure dimension");
    }
    if (!std::isfinite(a.weight.real()) || !std::isfinite(a.weight.imag())) {
      throw std::invalid_argument("atom weight must be finite");
    }
  }
  return ComplexMeasure(dim, DiscreteData{std::move(atoms)});
}

ComplexMeasure ComplexMeasure::grid(GridSpec spec, std::vector<Complex> density) {
  spec.validate();
  if (density.size() != spec.size()) {
    throw std::invalid_argument("grid density length does not match grid shape");
  }
  int d = spec.dim();
  return ComplexMeasure(d, GridData{std::move(spec), std::move(density)});
}

ComplexMeasure ComplexMeasure::spectral(int dim, SpectralEvaluator evaluator, double tv_bound,
                                        MomentSpec moments) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("measure dimension must be in {1,2,3}");
  if (moments.dim() != dim) {
    throw std::invalid_argument("spectral measure: declared moments have wrong dimension");
  }
  if (!std::isfinite(tv_bound) || tv_bound < 0.0) {
    throw std::invalid_argument("spectral measure: total-variation bound must be finite and >= 0");
  }
  if (!evaluator) throw std::invalid_argument("spectral measure: evaluator must be callable");
  std::vector<double> zero(static_cast<std::size_t>(dim), 0.0);
  Complex at0 = evaluator(zero);
  Complex m0 = moments.value(MultiIndex::zero(dim));
  if (std::abs(at0 - m0) > 1e-12 * (1.0 + std::abs(m0))) {
    throw std::invalid_argument("spectral measure: evaluator(0) does not equal declared M_0");
  }
  return ComplexMeasure(dim, SpectralData{std::move(evaluator), tv_bound, std::move(moments)});
}

ComplexMeasure::Kind ComplexMeasure::kind() const noexcept {
  switch (data_.index()) {
    case 0:
      return Kind::Discrete;
    case 1:
      return Kind::Grid;
    default:
      return Kind::Spectral;
  }
}

const std::vector<Atom>& ComplexMeasure::atoms() const {
  if (kind() != Kind::Discrete) throw std::logic_error("measure is not discrete");
  return std::get<DiscreteData>(data_).atoms;
}

const GridSpec& ComplexMeasure::grid_spec() const {
  if (kind() != Kind::Grid) throw std::logic_error("measure is not grid-based");
  return std::get<GridData>(data_).spec;
}

const std::vector<Complex>& ComplexMeasure::density() const {
  if (kind() != Kind::Grid) throw std::logic_error("measure is not grid-based");
  return std::get<GridData>(data_).density;
}

const SpectralEvaluator& ComplexMeasure::evaluator() const {
  if (kind() != Kind::Spectral) throw std::logic_error("measure is not spectral");
  return std::get<SpectralData>(data_).evaluator;
}

const MomentSpec& ComplexMeasure::declared_moments() const {
  if (kind() != Kind::Spectral) throw std::logic_error("measure is not spectral");
  return std::get<SpectralData>(data_).moments;
}

double ComplexMeasure::declared_tv_bound() const {
  if (kind() != Kind::Spectral) throw std::logic_error("measure is not spectral");
  return std::get<SpectralData>(data_).tv_bound;
}

double total_variation_bound(const ComplexMeasure& mu) {
  switch (mu.kind()) {
    case ComplexMeasure::Kind::Discrete: {
      double s = 0.0;
      for (const Atom& a : mu.atoms()) s += std::abs(a.weight);
      return s;
    }
    case ComplexMeasure::Kind::Grid: {
      const GridSpec& g = mu.grid_spec();
      const auto& rho = mu.density();
      double s = 0.0;
      for (std::size_t i = 0; i < rho.size(); ++i) s += g.quad_weight(i) * std::abs(rho[i]);
      return s;
    }
    case ComplexMeasure::Kind::Spectral:
    default:
      return mu.declared_tv_bound();
  }
}

Complex moment(const ComplexMeasure& mu, const MultiIndex& beta) {
  if (beta.dim() != mu.dim()) {
    throw std::invalid_argument("moment: multi-index dimension does not match measure");
  }
  switch (mu.kind()) {
    case ComplexMeasure::Kind::Discrete: {
      Complex s{};
      for (const Atom& a : mu.atoms()) s += a.weight * monomial(a.position, beta);
      return s;
    }
    case ComplexMeasure::Kind::Grid: {
      const GridSpec& g = mu.grid_spec();
      const auto& rho = mu.density();
      Complex s{};
      for (std::size_t i = 0; i < rho.size(); ++i) {
        s += rho[i] * (g.quad_weight(i) * monomial(g.point(i), beta));
      }
      return s;
    }
    case ComplexMeasure::Kind::Spectral:
    default:
      return mu.declared_moments().value(beta);
  }
}

MomentMatchReport moments_match(const ComplexMeasure& mu, const MomentSpec& spec, double tol) {
  if (mu.dim() != spec.dim()) {
    throw std::invalid_argument("moments_match: dimensions do not match");
  }
  MomentMatchReport rep{true, 0.0, MultiIndex::zero(mu.dim())};
  for (const MultiIndex& beta : spec.indices()) {
    double err = std::abs(moment(mu, beta) - spec.value(beta));
    if (err > rep.max_abs_error) {
      rep.max_abs_error = err;
      rep.worst = beta;
    }
  }
  rep.matched = rep.max_abs_error <= tol;
  return rep;
}

namespace {

// Cholesky-style positive-semidefiniteness check for d <= 3.
void check_covariance(const std::vector<std::vector<double>>& cov, int d) {
  if (static_cast<int>(cov.size()) != d) {
    throw std::invalid_argument("gaussian: covariance must be d x d");
  }
  double scale = 0.0;
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(cov[static_cast<std::size_t>(i)].size()) != d) {
      throw std::invalid_argument("gaussian: covariance must be d x d");
    }
    for (int j = 0; j < d; ++j) {
      scale = std::max(scale, std::abs(cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
  }
  double tol = 1e-12 * std::max(1.0, scale);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                   cov[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) > tol) {
        throw std::invalid_argument("gaussian: covariance must be symmetric");
      }
    }
  }
  // LDL^T with tolerance on the pivots.
  std::vector<std::vector<double>> a = cov;
  for (int k = 0; k < d; ++k) {
    double piv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    if (piv < -tol) throw std::invalid_argument("gaussian: covariance must be positive semidefinite");
    if (piv <= tol) continue;  // semidefinite direction
    for (int i = k + 1; i < d; ++i) {
      double f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / piv;
      for (int j = k; j < d; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
    }
  }
}

}  // namespace

ComplexMeasure gaussian_spectral(int dim, std::vector<double> mean,
                                 std::vector<std::vector<double>> cov, Complex weight,
                                 int declared_order) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("gaussian: dimension must be in {1,2,3}");
  if (static_cast<int>(mean.size()) != dim) {
    throw std::invalid_argument("gaussian: mean has wrong dimension");
  }
  check_covariance(cov, dim);
  if (declared_order < 2) throw std::invalid_argument("gaussian: declared order must be >= 2");

  // E[x^beta] of N(mean, cov) by the Stein recurrence
  //   E[x^{beta+e_i}] = mean_i E[x^beta] + sum_j cov_ij beta_j E[x^{beta-e_j}].
  std::vector<MultiIndex> idx = enumerate_upto(dim, declared_order);
  std::vector<Complex> mom(idx.size());
  auto pos_of = [&](const MultiIndex& b) {
    auto it = std::lower_bound(idx.begin(), idx.end(), b, graded_lex_less);
    return static_cast<std::size_t>(it - idx.begin());
  };
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const MultiIndex& beta = idx[k];
    if (beta.order() == 0) {
      mom[k] = 1.0;
      continue;
    }
    int i = 0;
    while (beta[i] == 0) ++i;
    std::vector<int> rest = beta.entries();
    rest[static_cast<std::size_t>(i)] -= 1;
    MultiIndex alpha{rest};
    Complex v = mean[static_cast<std::size_t>(i)] * mom[pos_of(alpha)];
    for (int j = 0; j < dim; ++j) {
      if (alpha[j] == 0) continue;
      std::vector<int> lower = alpha.entries();
      lower[static_cast<std::size_t>(j)] -= 1;
      v += cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
           static_cast<double>(alpha[j]) * mom[pos_of(MultiIndex{lower})];
    }
    mom[k] = v;
  }
  std::vector<std::pair<MultiIndex, Complex>> declared;
  declared.reserve(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) declared.emplace_back(idx[k], weight * mom[k]);

  auto mean_copy = mean;
  auto cov_copy = cov;
  SpectralEvaluator eval = [dim, mean_copy, cov_copy, weight](std::span<const double> xi) {
    double phase = 0.0, quad = 0.0;
    for (int i = 0; i < dim; ++i) {
      phase += mean_copy[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(i)];
      for (int j = 0; j < dim; ++j) {
        quad += xi[static_cast<std::size_t>(i)] *
                cov_copy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                xi[static_cast<std::size_t>(j)];
      }
    }
    return weight * std::exp(Complex(-0.5 * quad, -phase));
  };
  double tv = std::abs(weight);
  return ComplexMeasure::spectral(dim, std::move(eval), tv,
                                  MomentSpec(dim, declared_order, declared));
}

}  // namespace fmet
