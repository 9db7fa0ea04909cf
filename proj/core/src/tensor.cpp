#include "l2a/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace l2a {

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)),
      data_(std::accumulate(shape_.begin(), shape_.end(), std::size_t{1}, std::multiplies<>())) {}

Vec Tensor::fibre(std::size_t i, std::size_t j) const {
  const std::size_t n = shape_[2];
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(offset3(i, j, 0));
  return Vec(begin, begin + static_cast<std::ptrdiff_t>(n));
}

Vec Tensor::fibre(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = shape_[3];
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(offset4(i, j, k, 0));
  return Vec(begin, begin + static_cast<std::ptrdiff_t>(n));
}

void Tensor::set_fibre(std::size_t i, std::size_t j, const Vec& v) {
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(offset3(i, j, 0)));
}

void Tensor::set_fibre(std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(offset4(i, j, k, 0)));
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace l2a
