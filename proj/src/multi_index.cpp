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

#include "fmet/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace fmet {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("multi-index must have dimension >= 1");
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

MultiIndex MultiIndex::zero(int dim) {
  if (dim < 1) throw std::invalid_argument("multi-index must have dimension >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

MultiIndex MultiIndex::unit(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw std::invalid_argument("unit index axis out of range");
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(axis)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::order() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string MultiIndex::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j > 0) s += ',';
    s += std::to_string(entries_[j]);
  }
  s += ']';
  return s;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.entries() < b.entries();
}

namespace {

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("multi-index combinatorial product exceeds 64-bit range");
  }
  return out;
}

long long scalar_factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

// Product form; exact in 64 bits for the orders used here.
long long scalar_binomial(int n, int k) {
  if (2 * k > n) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace

long long factorial(const MultiIndex& beta) {
  long long r = 1;
  for (int j = 0; j < beta.dim(); ++j) r = checked_mul(r, scalar_factorial(beta[j]));
  return r;
}

double monomial(std::span<const double> x, const MultiIndex& beta) {
  if (static_cast<int>(x.size()) != beta.dim()) {
    throw std::invalid_argument("monomial: point dimension does not match multi-index");
  }
  double p = 1.0;
  for (int j = 0; j < beta.dim(); ++j) {
    for (int k = 0; k < beta[j]; ++k) p *= x[static_cast<std::size_t>(j)];
  }
  return p;
}

bool leq(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) {
    throw std::invalid_argument("leq: multi-index dimensions do not match");
  }
  for (int j = 0; j < alpha.dim(); ++j) {
    if (alpha[j] > beta[j]) return false;
  }
  return true;
}

long long binomial(const MultiIndex& beta, const MultiIndex& alpha) {
  if (!leq(alpha, beta)) {
    throw std::invalid_argument("binomial: requires alpha <= beta componentwise");
  }
  long long r = 1;
  for (int j = 0; j < beta.dim(); ++j) r = checked_mul(r, scalar_binomial(beta[j], alpha[j]));
  return r;
}

std::vector<MultiIndex> enumerate_upto(int dim, int max_order) {
  if (dim < 1) throw std::invalid_argument("enumerate_upto: dimension must be >= 1");
  if (max_order < 0) throw std::invalid_argument("enumerate_upto: order must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  // Compositions of each grade in lexicographic order.
  auto emit = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == dim - 1) {
      cur[static_cast<std::size_t>(axis)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(axis)] = v;
      self(self, axis + 1, remaining - v);
    }
  };
  for (int grade = 0; grade <= max_order; ++grade) emit(emit, 0, grade);
  return out;
}

}  // namespace fmet
