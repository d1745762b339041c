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

#ifndef FMET_MULTI_INDEX_HPP
#define FMET_MULTI_INDEX_HPP

#include <span>
#include <string>
#include <vector>

namespace fmet {

/// Exponent vector with non-negative integer entries, one per axis.
/// Indexes monomials x^beta, moments, and partial derivatives D^beta.
class MultiIndex {
 public:
  /// Entries must be non-negative and non-empty.
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex zero(int dim);
  /// The j-th unit index e_j in the given dimension.
  static MultiIndex unit(int dim, int axis);

  int dim() const noexcept { return static_cast<int>(entries_.size()); }
  /// The order |beta| = sum of entries.
  int order() const noexcept;
  int operator[](int axis) const { return entries_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  bool operator==(const MultiIndex&) const = default;

  /// Renders as an integer array, e.g. "[1,2,0]" (the serialized form).
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Graded-lexicographic order: lower |beta| first, lexicographic within a grade.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

/// beta! = prod_j (beta_j)!. Throws std::overflow_error if the product
/// exceeds the 64-bit range.
long long factorial(const MultiIndex& beta);

/// x^beta with the convention 0^0 = 1. Requires x.size() == beta.dim().
double monomial(std::span<const double> x, const MultiIndex& beta);

/// Componentwise partial order: alpha_j <= beta_j for all j.
bool leq(const MultiIndex& alpha, const MultiIndex& beta);

/// prod_j C(beta_j, alpha_j). Requires alpha <= beta (componentwise).
long long binomial(const MultiIndex& beta, const MultiIndex& alpha);

/// All beta with |beta| <= max_order in graded-lexicographic order.
/// The result has exactly C(dim + max_order, dim) entries.
std::vector<MultiIndex> enumerate_upto(int dim, int max_order);

}  // namespace fmet

#endif  // FMET_MULTI_INDEX_HPP
