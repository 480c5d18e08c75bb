#pragma once

#include <string>
#include <vector>

#include "mdlp/image.hpp"

namespace mdlp {

inline constexpr int kTextureSourceSize = 512;
inline constexpr int kTextureTileSize = 128;

// A decoded image together with its identifier and category label.
struct LabeledImage {
    std::string id;
    std::uint32_t category = 0;
    MultiChannelImage image;
};

// Splits a 512x512 texture into its 16 non-overlapping 128x128 tiles, in
// row-major order; tile ids are "<stem>_r<row>_c<col>" and every tile
// inherits the source category. Throws SizeError on any other input size.
std::vector<LabeledImage> tile_vistex(const MultiChannelImage& source,
                                      const std::string& stem, std::uint32_t category);

}  // namespace mdlp
