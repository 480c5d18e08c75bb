#include "mdlp/tiling.hpp"

namespace mdlp {

std::vector<LabeledImage> tile_vistex(const MultiChannelImage& source,
                                      const std::string& stem, std::uint32_t category) {
    require_uniform_channels(source);
    if (source.width() != kTextureSourceSize || source.height() != kTextureSourceSize) {
        throw SizeError("texture must be " + std::to_string(kTextureSourceSize) + "x" +
                        std::to_string(kTextureSourceSize) + ", got " +
                        std::to_string(source.width()) + "x" +
                        std::to_string(source.height()));
    }

    constexpr int kGrid = kTextureSourceSize / kTextureTileSize;
    std::vector<LabeledImage> tiles;
    tiles.reserve(kGrid * kGrid);

    for (int tr = 0; tr < kGrid; ++tr) {
        for (int tc = 0; tc < kGrid; ++tc) {
            LabeledImage tile;
            tile.id = stem + "_r" + std::to_string(tr) + "_c" + std::to_string(tc);
            tile.category = category;
            for (const ChannelImage& src : source.channels) {
                ChannelImage dst = make_channel(kTextureTileSize, kTextureTileSize, 0, src.channel);
                for (int r = 0; r < kTextureTileSize; ++r) {
                    for (int c = 0; c < kTextureTileSize; ++c) {
                        dst.at(r, c) = src.at(tr * kTextureTileSize + r, tc * kTextureTileSize + c);
                    }
                }
                tile.image.channels.push_back(std::move(dst));
            }
            tiles.push_back(std::move(tile));
        }
    }
    return tiles;
}

}  // namespace mdlp
