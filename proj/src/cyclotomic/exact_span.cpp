#include "ekrm/exact_span.hpp"

#include <stdexcept>

namespace ekrm {

std::vector<Rational> ExactSpan::reduce(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length differs from span dimension");
  Rational f;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    f = v[p];
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(row[j])) v[j] -= f * row[j];
  }
  return v;
}

bool ExactSpan::add(const std::vector<Rational>& v) {
  if (rows_.size() == dim_) {
    if (v.size() != dim_) throw std::invalid_argument("vector length differs from span dimension");
    return false;
  }
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(r[p]) == 0) ++p;
  if (p == dim_) return false;
  const Rational lead = r[p];
  for (auto& x : r) x /= lead;
  // Keep rows fully reduced: clear the new pivot column elsewhere.
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(r[j])) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool ExactSpan::contains(const std::vector<Rational>& v) const {
  const auto r = reduce(v);
  for (const auto& x : r)
    if (sgn(x)) return false;
  return true;
}

std::vector<Rational> ExactSpan::indicator(std::size_t dimension, const std::vector<std::size_t>& support) {
  std::vector<Rational> v(dimension);
  for (auto i : support) {
    if (i >= dimension) throw std::out_of_range("indicator index out of range");
    v[i] = 1;
  }
  return v;
}

}  // namespace ekrm
