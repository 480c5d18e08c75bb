#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdlp/image.hpp"
#include "mdlp/pattern.hpp"

namespace mdlp {

// Which sub-pattern planes go into the signature.
enum class DescriptorMode { kMdlp, kLbpOnly, kLmepOnly };

// Sub-histograms per channel: 5 for the full descriptor, 1 for LBP alone,
// 4 for the mesh codes alone.
int planes_per_channel(DescriptorMode mode);

std::string mode_name(DescriptorMode mode);
DescriptorMode mode_from_name(const std::string& name);

// Total signature length: channels * planes_per_channel * 2^neighbors.
std::size_t feature_length(int channels, int neighbors, DescriptorMode mode);

// The image signature: per-channel, per-sub-pattern histograms concatenated
// channel-major. Each block holds 2^neighbors bins; when normalized, every
// block sums to 1.
struct FeatureVector {
    std::vector<float> values;
    int channels = 0;
    int neighbors = 8;
    int radius = 1;
    DescriptorMode mode = DescriptorMode::kMdlp;
    bool normalized = true;

    std::size_t block_length() const { return std::size_t{1} << neighbors; }
    std::size_t block_count() const { return values.size() / block_length(); }
    std::span<const float> block(std::size_t index) const {
        return {values.data() + index * block_length(), block_length()};
    }
};

// Per-bin occurrence counts of the plane's codes; bin b holds the number of
// pixels whose code equals b, so the counts sum to the plane area.
std::vector<std::uint32_t> histogram(const PatternPlane& plane, std::size_t bins);

// Builds the signature for a decoded image. Every channel must share one
// size (ShapeError otherwise); with normalize each sub-histogram is divided
// by the interior area so blocks sum to 1 regardless of image size.
FeatureVector build_feature(const MultiChannelImage& image, const PatternParams& params,
                            DescriptorMode mode = DescriptorMode::kMdlp,
                            bool normalize = true);

}  // namespace mdlp
