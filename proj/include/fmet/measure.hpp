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

#ifndef FMET_MEASURE_HPP
#define FMET_MEASURE_HPP

#include <complex>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "fmet/multi_index.hpp"

namespace fmet {

using Complex = std::complex<double>;

/// Frequency-side evaluator xi -> phi(xi).
using SpectralEvaluator = std::function<Complex(std::span<const double>)>;

/// A prescribed complex moment family {M_beta} for every |beta| <= order.
class MomentSpec {
 public:
  /// Requires order >= 2, a value for every |beta| <= order, and all
  /// multi-indices of the given dimension.
  MomentSpec(int dim, int order, const std::vector<std::pair<MultiIndex, Complex>>& values);

  int dim() const noexcept { return dim_; }
  int order() const noexcept { return order_; }

  /// Indices in graded-lexicographic order; values() is aligned with it.
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  /// Throws std::out_of_range when |beta| exceeds the declared order.
  const Complex& value(const MultiIndex& beta) const;

  bool operator==(const MomentSpec&) const = default;

 private:
  int dim_;
  int order_;
  std::vector<MultiIndex> indices_;
  std::vector<Complex> values_;
};

/// Point mass: position in R^d with a complex weight.
struct Atom {
  std::vector<double> position;
  Complex weight;

  bool operator==(const Atom&) const = default;
};

/// Rectangular grid descriptor, row-major flattening.
struct GridSpec {
  std::vector<double> origin;
  std::vector<double> spacing;
  std::vector<int> shape;

  int dim() const noexcept { return static_cast<int>(shape.size()); }
  std::size_t size() const noexcept;
  /// Coordinates of the node with the given flat (row-major) index.
  std::vector<double> point(std::size_t flat) const;
  /// Trapezoidal quadrature weight of the node, volume element included.
  double quad_weight(std::size_t flat) const;

  /// Throws std::invalid_argument when shapes/spacings are inconsistent
  /// or the dimension is outside {1, 2, 3}.
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

/// A complex-valued finite Borel measure in one of three representations:
/// finitely many weighted atoms, a sampled density on a rectangular grid
/// (integrals by trapezoidal quadrature), or a closed-form frequency-side
/// evaluator with declared total-variation bound and declared moments.
class ComplexMeasure {
 public:
  enum class Kind { Discrete, Grid, Spectral };

  static ComplexMeasure discrete(int dim, std::vector<Atom> atoms);
  static ComplexMeasure grid(GridSpec spec, std::vector<Complex> density);
  /// Requires tv_bound finite and >= 0, and evaluator(0) equal to the
  /// declared 0-th moment.
  static ComplexMeasure spectral(int dim, SpectralEvaluator evaluator, double tv_bound,
                                 MomentSpec moments);

  int dim() const noexcept { return dim_; }
  Kind kind() const noexcept;

  const std::vector<Atom>& atoms() const;
  const GridSpec& grid_spec() const;
  const std::vector<Complex>& density() const;
  const SpectralEvaluator& evaluator() const;
  const MomentSpec& declared_moments() const;
  double declared_tv_bound() const;

 private:
  struct DiscreteData {
    std::vector<Atom> atoms;
  };
  struct GridData {
    GridSpec spec;
    std::vector<Complex> density;
  };
  struct SpectralData {
    SpectralEvaluator evaluator;
    double tv_bound;
    MomentSpec moments;
  };

  ComplexMeasure(int dim, std::variant<DiscreteData, GridData, SpectralData> data)
      : dim_(dim), data_(std::move(data)) {}

  int dim_;
  std::variant<DiscreteData, GridData, SpectralData> data_;
};

/// Upper bound on |mu|(R^d): exact atom sum for Discrete, quadrature of
/// |density| for Grid, the declared bound for Spectral.
double total_variation_bound(const ComplexMeasure& mu);

/// The beta-moment: integral of x^beta d mu. Spectral measures answer from
/// their declared data and throw std::out_of_range beyond the declared order.
Complex moment(const ComplexMeasure& mu, const MultiIndex& beta);

struct MomentMatchReport {
  bool matched;
  double max_abs_error;
  MultiIndex worst;  // offender with the largest discrepancy
};

/// Membership test against a prescribed moment family: max over |beta| <= order
/// of |moment(mu, beta) - M_beta| compared against tol.
MomentMatchReport moments_match(const ComplexMeasure& mu, const MomentSpec& spec,
                                double tol = 1e-9);

/// Spectral measure for the characteristic function of weight * N(mean, cov),
/// with moments declared up to the given order (Stein recurrence).
ComplexMeasure gaussian_spectral(int dim, std::vector<double> mean,
                                 std::vector<std::vector<double>> cov, Complex weight,
                                 int declared_order = 12);

}  // namespace fmet

#endif  // FMET_MEASURE_HPP
