#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fognet/errors.hpp"

namespace fognet {

// Dense batched 3-d array, layout [batch][channel][position], position
// fastest. Carrier of all network activations and gradients.
template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int64_t batch, int64_t channels, int64_t length)
      : batch_(batch), channels_(channels), length_(length) {
    if (batch < 1 || channels < 1 || length < 1) {
      throw NumericError("Tensor3: all shape components must be >= 1, got " +
                         shape_string(batch, channels, length));
    }
    data_.assign(static_cast<size_t>(batch * channels * length), T(0));
  }

  int64_t batch() const { return batch_; }
  int64_t channels() const { return channels_; }
  int64_t length() const { return length_; }
  int64_t size() const { return batch_ * channels_ * length_; }

  T* row(int64_t b, int64_t c) { return data_.data() + (b * channels_ + c) * length_; }
  const T* row(int64_t b, int64_t c) const {
    return data_.data() + (b * channels_ + c) * length_;
  }
  T* sample(int64_t b) { return data_.data() + b * channels_ * length_; }
  const T* sample(int64_t b) const { return data_.data() + b * channels_ * length_; }

  T& at(int64_t b, int64_t c, int64_t l) { return data_[(b * channels_ + c) * length_ + l]; }
  const T& at(int64_t b, int64_t c, int64_t l) const {
    return data_[(b * channels_ + c) * length_ + l];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool same_shape(const Tensor3& o) const {
    return batch_ == o.batch_ && channels_ == o.channels_ && length_ == o.length_;
  }

  std::string shape() const { return shape_string(batch_, channels_, length_); }

  static std::string shape_string(int64_t b, int64_t c, int64_t l) {
    return "(" + std::to_string(b) + ", " + std::to_string(c) + ", " + std::to_string(l) + ")";
  }

 private:
  int64_t batch_ = 0, channels_ = 0, length_ = 0;
  std::vector<T> data_;
};

// Plain row-major matrix for head activations, logits and targets.
template <class T>
class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(int64_t rows, int64_t cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
      throw NumericError("Matrix2: shape components must be >= 1, got (" +
                         std::to_string(rows) + ", " + std::to_string(cols) + ")");
    }
    data_.assign(static_cast<size_t>(rows * cols), T(0));
  }

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  int64_t size() const { return rows_ * cols_; }

  T* row(int64_t r) { return data_.data() + r * cols_; }
  const T* row(int64_t r) const { return data_.data() + r * cols_; }
  T& at(int64_t r, int64_t c) { return data_[r * cols_ + c]; }
  const T& at(int64_t r, int64_t c) const { return data_[r * cols_ + c]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool same_shape(const Matrix2& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  std::string shape() const {
    return "(" + std::to_string(rows_) + ", " + std::to_string(cols_) + ")";
  }

 private:
  int64_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Tensor3f = Tensor3<float>;
using Tensor3d = Tensor3<double>;

}  // namespace fognet
