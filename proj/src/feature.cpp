#include "mdlp/feature.hpp"

namespace mdlp {

int planes_per_channel(DescriptorMode mode) {
    switch (mode) {
        case DescriptorMode::kMdlp: return 1 + kMeshDistances;
        case DescriptorMode::kLbpOnly: return 1;
        case DescriptorMode::kLmepOnly: return kMeshDistances;
    }
    throw ParamError("unknown descriptor mode");
}

std::string mode_name(DescriptorMode mode) {
    switch (mode) {
        case DescriptorMode::kMdlp: return "mdlp";
        case DescriptorMode::kLbpOnly: return "lbp";
        case DescriptorMode::kLmepOnly: return "lmep";
    }
    throw ParamError("unknown descriptor mode");
}

DescriptorMode mode_from_name(const std::string& name) {
    if (name == "mdlp") return DescriptorMode::kMdlp;
    if (name == "lbp") return DescriptorMode::kLbpOnly;
    if (name == "lmep") return DescriptorMode::kLmepOnly;
    throw ParamError("unknown descriptor mode '" + name + "' (expected mdlp, lbp or lmep)");
}

std::size_t feature_length(int channels, int neighbors, DescriptorMode mode) {
    return static_cast<std::size_t>(channels) * planes_per_channel(mode) *
           (std::size_t{1} << neighbors);
}

std::vector<std::uint32_t> histogram(const PatternPlane& plane, std::size_t bins) {
    std::vector<std::uint32_t> counts(bins, 0);
    for (std::uint32_t code : plane.codes) {
        if (code >= bins) {
            throw ParamError("pattern code " + std::to_string(code) +
                             " exceeds histogram size " + std::to_string(bins));
        }
        ++counts[code];
    }
    return counts;
}

namespace {

void append_block(std::vector<float>& out, const PatternPlane& plane,
                  std::size_t bins, bool normalize) {
    std::vector<std::uint32_t> counts = histogram(plane, bins);
    double area = static_cast<double>(plane.codes.size());
    for (std::uint32_t count : counts) {
        out.push_back(normalize ? static_cast<float>(count / area)
                                : static_cast<float>(count));
    }
}

}  // namespace

FeatureVector build_feature(const MultiChannelImage& image, const PatternParams& params,
                            DescriptorMode mode, bool normalize) {
    if (image.channels.empty()) throw ShapeError("image has no channels");
    require_uniform_channels(image);

    FeatureVector feature;
    feature.channels = image.channel_count();
    feature.neighbors = params.neighbors;
    feature.radius = params.radius;
    feature.mode = mode;
    feature.normalized = normalize;

    std::size_t bins = std::size_t{1} << params.neighbors;
    feature.values.reserve(feature_length(feature.channels, params.neighbors, mode));

    for (const ChannelImage& channel : image.channels) {
        switch (mode) {
            case DescriptorMode::kMdlp:
                for (const PatternPlane& plane : mdlp_planes(channel, params)) {
                    append_block(feature.values, plane, bins, normalize);
                }
                break;
            case DescriptorMode::kLbpOnly:
                append_block(feature.values, lbp_plane(channel, params), bins, normalize);
                break;
            case DescriptorMode::kLmepOnly: {
                PatternParams mesh = params;
                for (int d = 1; d <= kMeshDistances; ++d) {
                    mesh.mesh_distance = d;
                    append_block(feature.values, lmep_plane(channel, mesh), bins, normalize);
                }
                break;
            }
        }
    }
    return feature;
}

}  // namespace mdlp
