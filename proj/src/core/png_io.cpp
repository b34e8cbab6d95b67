#include "irfuse/core/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <vector>

namespace irfuse::core {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngRaw {
  int width = 0, height = 0;
  int channels = 0;   // after transforms
  int bit_depth = 0;  // 8 or 16
  bool palette_indices = false;
  std::vector<unsigned char> bytes;  // row-major, big-endian for 16-bit
};

PngRaw read_raw(const std::filesystem::path& path, bool keep_palette_indices) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw std::runtime_error("png: cannot open " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: read struct alloc failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png: info struct alloc failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("png: failed to decode " + path.string());
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 width = 0, height = 0;
  int bit_depth = 0, color_type = 0;
  png_get_IHDR(png, info, &width, &height, &bit_depth, &color_type, nullptr, nullptr, nullptr);

  PngRaw out;
  out.width = static_cast<int>(width);
  out.height = static_cast<int>(height);

  if (color_type == PNG_COLOR_TYPE_PALETTE && keep_palette_indices) {
    // No palette expansion: rows hold raw indices.
    if (bit_depth < 8) png_set_packing(png);
    out.palette_indices = true;
    out.channels = 1;
    out.bit_depth = 8;
  } else {
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);
    out.channels = png_get_channels(png, info);
    out.bit_depth = png_get_bit_depth(png, info);
  }

  const std::size_t row_bytes = png_get_rowbytes(png, info);
  out.bytes.resize(row_bytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = out.bytes.data() + y * row_bytes;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void write_raw(const std::filesystem::path& path, int width, int height, int color_type,
               int bit_depth, const std::vector<unsigned char>& bytes,
               const std::vector<png_color>* palette) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw std::runtime_error("png: cannot write " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw std::runtime_error("png: write struct alloc failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png: info struct alloc failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("png: failed to encode " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  if (palette)
    png_set_PLTE(png, info, palette->data(), static_cast<int>(palette->size()));
  png_write_info(png, info);

  const int channels = (color_type == PNG_COLOR_TYPE_RGB) ? 3 : 1;
  const std::size_t row_bytes = static_cast<std::size_t>(width) * channels;
  std::vector<png_bytep> rows(height);
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(bytes.data() + y * row_bytes);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

unsigned char to_byte(float v) {
  const float c = std::clamp(v, 0.0f, 1.0f);
  return static_cast<unsigned char>(std::lround(c * 255.0f));
}

}  // namespace

TensorF read_image_png(const std::filesystem::path& path) {
  const PngRaw raw = read_raw(path, /*keep_palette_indices=*/false);
  const int c = (raw.channels >= 3) ? 3 : 1;
  TensorF img(c, raw.height, raw.width);
  const int in_c = raw.channels;
  if (raw.bit_depth == 16) {
    const float scale = 1.0f / 65535.0f;
    for (int y = 0; y < raw.height; ++y)
      for (int x = 0; x < raw.width; ++x)
        for (int ci = 0; ci < c; ++ci) {
          const std::size_t o = ((static_cast<std::size_t>(y) * raw.width + x) * in_c + ci) * 2;
          const unsigned v = (static_cast<unsigned>(raw.bytes[o]) << 8) | raw.bytes[o + 1];
          img.at(ci, y, x) = v * scale;
        }
  } else {
    const float scale = 1.0f / 255.0f;
    for (int y = 0; y < raw.height; ++y)
      for (int x = 0; x < raw.width; ++x)
        for (int ci = 0; ci < c; ++ci) {
          const std::size_t o = (static_cast<std::size_t>(y) * raw.width + x) * in_c + ci;
          img.at(ci, y, x) = raw.bytes[o] * scale;
        }
  }
  return img;
}

Mask read_mask_png(const std::filesystem::path& path) {
  const PngRaw raw = read_raw(path, /*keep_palette_indices=*/true);
  if (!raw.palette_indices && raw.channels != 1)
    throw std::runtime_error("png: mask must be indexed or grayscale: " + path.string());
  Mask m(raw.height, raw.width);
  if (raw.bit_depth == 16) {
    for (int i = 0; i < m.numel(); ++i) {
      const std::size_t o = static_cast<std::size_t>(i) * 2;
      m.data[i] = (static_cast<std::int32_t>(raw.bytes[o]) << 8) | raw.bytes[o + 1];
    }
  } else {
    for (int i = 0; i < m.numel(); ++i) m.data[i] = raw.bytes[i];
  }
  return m;
}

void write_gray8_png(const std::filesystem::path& path, const TensorF& img) {
  if (img.c != 1) throw std::invalid_argument("write_gray8_png: expected 1 channel");
  std::vector<unsigned char> bytes(static_cast<std::size_t>(img.h) * img.w);
  for (int i = 0; i < img.numel(); ++i) bytes[i] = to_byte(img.data[i]);
  write_raw(path, img.w, img.h, PNG_COLOR_TYPE_GRAY, 8, bytes, nullptr);
}

void write_rgb8_png(const std::filesystem::path& path, const TensorF& img) {
  if (img.c != 3) throw std::invalid_argument("write_rgb8_png: expected 3 channels");
  std::vector<unsigned char> bytes(static_cast<std::size_t>(img.h) * img.w * 3);
  std::size_t o = 0;
  for (int y = 0; y < img.h; ++y)
    for (int x = 0; x < img.w; ++x)
      for (int ci = 0; ci < 3; ++ci) bytes[o++] = to_byte(img.at(ci, y, x));
  write_raw(path, img.w, img.h, PNG_COLOR_TYPE_RGB, 8, bytes, nullptr);
}

void write_mask_png(const std::filesystem::path& path, const Mask& mask) {
  std::int32_t max_label = 0;
  for (auto v : mask.data) {
    if (v < 0 || v > 255)
      throw std::invalid_argument("write_mask_png: labels must fit in 8-bit palette indices");
    max_label = std::max(max_label, v);
  }
  // Palette colorizes labels for inspection; indices stay equal to labels.
  std::vector<png_color> palette(static_cast<std::size_t>(max_label) + 1);
  palette[0] = png_color{0, 0, 0};
  for (int i = 1; i <= max_label; ++i) {
    palette[i] = png_color{static_cast<png_byte>(37 * i % 256), static_cast<png_byte>(97 * i % 256),
                           static_cast<png_byte>(173 * i % 256)};
  }
  std::vector<unsigned char> bytes(mask.data.size());
  for (std::size_t i = 0; i < mask.data.size(); ++i)
    bytes[i] = static_cast<unsigned char>(mask.data[i]);
  write_raw(path, mask.w, mask.h, PNG_COLOR_TYPE_PALETTE, 8, bytes, &palette);
}

void write_image_png(const std::filesystem::path& path, const TensorF& img) {
  if (img.c == 1)
    write_gray8_png(path, img);
  else if (img.c == 3)
    write_rgb8_png(path, img);
  else
    throw std::invalid_argument("write_image_png: expected 1 or 3 channels");
}

}  // namespace irfuse::core
