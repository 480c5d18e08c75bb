#pragma once

#include <filesystem>

#include "mdlp/image.hpp"

namespace mdlp {

// Decodes a raster file into per-channel grids. Color images come back as
// three channels in R, G, B order; grayscale as a single channel; an alpha
// channel, when present, is dropped. 16-bit inputs are scaled down to 8 bits.
// Throws FormatError when the file cannot be decoded and IoError when it
// cannot be read at all.
MultiChannelImage load_image(const std::filesystem::path& path);

// Encodes a 1- or 3-channel image; the format follows the file extension.
void save_image(const MultiChannelImage& image, const std::filesystem::path& path);

}  // namespace mdlp
