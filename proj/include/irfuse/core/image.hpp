#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "irfuse/core/tensor.hpp"

namespace irfuse::core {

// Bilinear resize (half-pixel centers, same convention as the nn upsampler).
template <class T>
Tensor<T> resize_bilinear(const Tensor<T>& in, int oh, int ow) {
  if (in.h == oh && in.w == ow) return in;
  Tensor<T> out(in.c, oh, ow);
  const double sy = static_cast<double>(in.h) / oh;
  const double sx = static_cast<double>(in.w) / ow;
  for (int y = 0; y < oh; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(in.h - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, in.h - 1);
    const double wy = fy - y0;
    for (int x = 0; x < ow; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(in.w - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, in.w - 1);
      const double wx = fx - x0;
      for (int ci = 0; ci < in.c; ++ci) {
        const double v00 = in.at(ci, y0, x0), v01 = in.at(ci, y0, x1);
        const double v10 = in.at(ci, y1, x0), v11 = in.at(ci, y1, x1);
        out.at(ci, y, x) = static_cast<T>((1 - wy) * ((1 - wx) * v00 + wx * v01) +
                                          wy * ((1 - wx) * v10 + wx * v11));
      }
    }
  }
  return out;
}

inline Mask resize_nearest(const Mask& in, int oh, int ow) {
  if (in.h == oh && in.w == ow) return in;
  Mask out(oh, ow);
  for (int y = 0; y < oh; ++y) {
    int sy = std::min(static_cast<int>((y + 0.5) * in.h / oh), in.h - 1);
    for (int x = 0; x < ow; ++x) {
      int sx = std::min(static_cast<int>((x + 0.5) * in.w / ow), in.w - 1);
      out.at(y, x) = in.at(sy, sx);
    }
  }
  return out;
}

// Area-average downsample of a binary mask to feature resolution; outputs
// fractional coverage weights in [0,1].
template <class T>
Tensor<T> mask_coverage(const Mask& m, int oh, int ow) {
  Tensor<T> out(1, oh, ow);
  for (int y = 0; y < oh; ++y) {
    const int y0 = static_cast<int>(static_cast<std::int64_t>(y) * m.h / oh);
    const int y1 = static_cast<int>((static_cast<std::int64_t>(y + 1) * m.h + oh - 1) / oh);
    for (int x = 0; x < ow; ++x) {
      const int x0 = static_cast<int>(static_cast<std::int64_t>(x) * m.w / ow);
      const int x1 = static_cast<int>((static_cast<std::int64_t>(x + 1) * m.w + ow - 1) / ow);
      double acc = 0.0;
      for (int yy = y0; yy < y1; ++yy)
        for (int xx = x0; xx < x1; ++xx) acc += (m.at(yy, xx) != 0) ? 1.0 : 0.0;
      out.at(0, y, x) = static_cast<T>(acc / ((y1 - y0) * (x1 - x0)));
    }
  }
  return out;
}

template <class T>
Tensor<T> crop(const Tensor<T>& in, int top, int left, int ch, int cw) {
  if (top < 0 || left < 0 || top + ch > in.h || left + cw > in.w)
    throw std::out_of_range("crop: window outside image");
  Tensor<T> out(in.c, ch, cw);
  for (int ci = 0; ci < in.c; ++ci)
    for (int y = 0; y < ch; ++y)
      for (int x = 0; x < cw; ++x) out.at(ci, y, x) = in.at(ci, top + y, left + x);
  return out;
}

inline Mask crop(const Mask& in, int top, int left, int ch, int cw) {
  if (top < 0 || left < 0 || top + ch > in.h || left + cw > in.w)
    throw std::out_of_range("crop: window outside mask");
  Mask out(ch, cw);
  for (int y = 0; y < ch; ++y)
    for (int x = 0; x < cw; ++x) out.at(y, x) = in.at(top + y, left + x);
  return out;
}

template <class T>
Tensor<T> flip_horizontal(const Tensor<T>& in) {
  Tensor<T> out(in.c, in.h, in.w);
  for (int ci = 0; ci < in.c; ++ci)
    for (int y = 0; y < in.h; ++y)
      for (int x = 0; x < in.w; ++x) out.at(ci, y, x) = in.at(ci, y, in.w - 1 - x);
  return out;
}

inline Mask flip_horizontal(const Mask& in) {
  Mask out(in.h, in.w);
  for (int y = 0; y < in.h; ++y)
    for (int x = 0; x < in.w; ++x) out.at(y, x) = in.at(y, in.w - 1 - x);
  return out;
}

template <class T>
Tensor<T> replicate_to_channels(const Tensor<T>& in, int channels) {
  if (in.c == channels) return in;
  if (in.c != 1) throw std::invalid_argument("replicate_to_channels: input must be 1-channel");
  Tensor<T> out(channels, in.h, in.w);
  for (int ci = 0; ci < channels; ++ci)
    for (int i = 0; i < in.plane(); ++i) out.data[ci * in.plane() + i] = in.data[i];
  return out;
}

template <class T>
void clamp01(Tensor<T>& t) {
  for (auto& v : t.data) v = std::clamp(v, T(0), T(1));
}

inline std::set<std::int32_t> mask_classes(const Mask& m) {
  std::set<std::int32_t> s(m.data.begin(), m.data.end());
  s.erase(0);
  return s;
}

}  // namespace irfuse::core
