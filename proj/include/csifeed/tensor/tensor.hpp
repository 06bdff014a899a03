// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "csifeed/common.hpp"

namespace csifeed {

namespace debug {
// When enabled, tensor constructors and tape ops verify all values are finite.
bool& checks_enabled();
inline bool& checks_enabled() {
  static bool on = false;
  return on;
}
}  // namespace debug

/// Dense row-major tensor. Value type: float for training, double for the
/// gradient-check harness.
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;

  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), T(0));
  }

  Tensor(std::vector<int> s, std::vector<T> d) : shape(std::move(s)), data(std::move(d)) {
    if (static_cast<size_t>(numel_of(shape)) != data.size())
      throw ShapeError("tensor data length " + std::to_string(data.size()) +
                       " does not match shape " + shape_str(shape));
    check_finite();
  }

  static Tensor scalar(T v) { return Tensor({1}, {v}); }

  static Tensor full(std::vector<int> s, T v) {
    Tensor t(std::move(s));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
  }

  static long numel_of(const std::vector<int>& s) {
    long n = 1;
    for (int e : s) {
      if (e <= 0) throw ShapeError("non-positive extent in shape " + shape_str(s));
      n *= e;
    }
    return n;
  }

  long numel() const { return static_cast<long>(data.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }

  T& at(long i) { return data[static_cast<size_t>(i)]; }
  T at(long i) const { return data[static_cast<size_t>(i)]; }

  // 2-D accessors (row-major).
  T& at(int r, int c) { return data[static_cast<size_t>(r) * shape[1] + c]; }
  T at(int r, int c) const { return data[static_cast<size_t>(r) * shape[1] + c]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  void check_finite() const {
    if (!debug::checks_enabled()) return;
    for (const T& v : data)
      if (!std::isfinite(static_cast<double>(v)))
        throw std::runtime_error("non-finite value in tensor " + shape_str(shape));
  }
};

using Tensor32 = Tensor<float>;
using Tensor64 = Tensor<double>;

template <typename T>
Tensor<T> tensor_cast(const Tensor<float>& src) {
  Tensor<T> out(src.shape);
  for (long i = 0; i < src.numel(); ++i) out.data[i] = static_cast<T>(src.data[i]);
  return out;
}

}  // namespace csifeed
