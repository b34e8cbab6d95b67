#pragma once

#include <filesystem>

#include "irfuse/core/tensor.hpp"

namespace irfuse::core {

// Images are read as float [0,1], 1-channel (grayscale) or 3-channel (RGB).
// Palette and RGBA files are expanded; 16-bit grayscale is scaled by 1/65535.
TensorF read_image_png(const std::filesystem::path& path);

// Masks carry class indices in their pixel values. Palette PNGs are read as
// raw palette indices (not colors); 8/16-bit grayscale values are taken as-is.
Mask read_mask_png(const std::filesystem::path& path);

void write_gray8_png(const std::filesystem::path& path, const TensorF& img);
void write_rgb8_png(const std::filesystem::path& path, const TensorF& img);

// Indexed-color PNG whose palette indices are the mask labels.
void write_mask_png(const std::filesystem::path& path, const Mask& mask);

void write_image_png(const std::filesystem::path& path, const TensorF& img);

}  // namespace irfuse::core
