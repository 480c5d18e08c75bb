#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdlp/errors.hpp"

namespace mdlp {

// Number of intensity levels per 8-bit channel.
inline constexpr int kIntensityLevels = 256;

// One color channel stored as a row-major grid of 8-bit intensities.
struct ChannelImage {
    int width = 0;
    int height = 0;
    int channel = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

// A decoded image as one ChannelImage per color channel, all the same size.
struct MultiChannelImage {
    std::vector<ChannelImage> channels;

    int channel_count() const { return static_cast<int>(channels.size()); }
    int width() const { return channels.empty() ? 0 : channels.front().width; }
    int height() const { return channels.empty() ? 0 : channels.front().height; }
};

inline ChannelImage make_channel(int width, int height, std::uint8_t fill = 0, int channel = 0) {
    ChannelImage img;
    img.width = width;
    img.height = height;
    img.channel = channel;
    img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

// Throws ShapeError unless every channel has identical dimensions.
inline void require_uniform_channels(const MultiChannelImage& image) {
    for (const ChannelImage& ch : image.channels) {
        if (ch.width != image.width() || ch.height != image.height()) {
            throw ShapeError("channel " + std::to_string(ch.channel) + " is " +
                             std::to_string(ch.width) + "x" + std::to_string(ch.height) +
                             ", expected " + std::to_string(image.width()) + "x" +
                             std::to_string(image.height()));
        }
    }
}

}  // namespace mdlp
