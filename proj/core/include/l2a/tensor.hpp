#ifndef L2A_TENSOR_HPP
#define L2A_TENSOR_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "l2a/exactla.hpp"

namespace l2a {

/// Dense rational tensor of rank 3 or 4, stored row-major (last index fastest).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_[axis]; }
  std::size_t size() const { return data_.size(); }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[offset3(i, j, k)]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[offset3(i, j, k)]; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[offset4(i, j, k, l)];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[offset4(i, j, k, l)];
  }

  /// The innermost fibre T(i, j, :) as a vector.
  Vec fibre(std::size_t i, std::size_t j) const;
  Vec fibre(std::size_t i, std::size_t j, std::size_t k) const;
  void set_fibre(std::size_t i, std::size_t j, const Vec& v);
  void set_fibre(std::size_t i, std::size_t j, std::size_t k, const Vec& v);

  std::vector<Rational>& data() { return data_; }
  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

 private:
  std::size_t offset3(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * shape_[1] + j) * shape_[2] + k;
  }
  std::size_t offset4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return ((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l;
  }

  std::vector<std::size_t> shape_;
  std::vector<Rational> data_;
};

}  // namespace l2a

#endif  // L2A_TENSOR_HPP
