#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace irfuse::core {

// Dense planar C×H×W tensor. Vectors are stored as (n, 1, 1).
template <class T>
struct Tensor {
  int c = 0, h = 0, w = 0;
  std::vector<T> data;

  Tensor() = default;
  Tensor(int c_, int h_, int w_, T fill = T(0))
      : c(c_), h(h_), w(w_), data(static_cast<std::size_t>(c_) * h_ * w_, fill) {
    if (c_ < 0 || h_ < 0 || w_ < 0) throw std::invalid_argument("Tensor: negative dim");
  }

  static Tensor vec(int n, T fill = T(0)) { return Tensor(n, 1, 1, fill); }
  static Tensor scalar(T v) { return Tensor(1, 1, 1, v); }

  int numel() const { return c * h * w; }
  int plane() const { return h * w; }
  bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }

  T& at(int ci, int hi, int wi) { return data[(static_cast<std::size_t>(ci) * h + hi) * w + wi]; }
  const T& at(int ci, int hi, int wi) const {
    return data[(static_cast<std::size_t>(ci) * h + hi) * w + wi];
  }
  T* plane_ptr(int ci) { return data.data() + static_cast<std::size_t>(ci) * h * w; }
  const T* plane_ptr(int ci) const { return data.data() + static_cast<std::size_t>(ci) * h * w; }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  template <class U>
  Tensor<U> cast() const {
    Tensor<U> out(c, h, w);
    for (int i = 0; i < numel(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

// Integer label mask, H×W, 0 = background.
struct Mask {
  int h = 0, w = 0;
  std::vector<std::int32_t> data;

  Mask() = default;
  Mask(int h_, int w_, std::int32_t fill = 0)
      : h(h_), w(w_), data(static_cast<std::size_t>(h_) * w_, fill) {}

  int numel() const { return h * w; }
  std::int32_t& at(int hi, int wi) { return data[static_cast<std::size_t>(hi) * w + wi]; }
  std::int32_t at(int hi, int wi) const { return data[static_cast<std::size_t>(hi) * w + wi]; }
  bool same_shape(const Mask& o) const { return h == o.h && w == o.w; }

  std::int64_t count(std::int32_t label) const {
    std::int64_t n = 0;
    for (auto v : data) n += (v == label);
    return n;
  }
  bool any() const {
    for (auto v : data)
      if (v != 0) return true;
    return false;
  }
};

}  // namespace irfuse::core
