#include "mdlp/pipeline.hpp"

#include "mdlp/imageio.hpp"
#include "mdlp/parallel.hpp"

namespace mdlp {

IndexData build_index(const DatasetManifest& manifest, const PatternParams& params,
                      DescriptorMode mode, bool normalize, int jobs) {
    if (manifest.entries.empty()) throw EmptyDatasetError("manifest has no entries");

    IndexData index;
    index.header.channels = static_cast<std::uint32_t>(manifest.channel_count);
    index.header.neighbors = static_cast<std::uint32_t>(params.neighbors);
    index.header.radius = static_cast<std::uint32_t>(params.radius);
    index.header.normalized = normalize;
    index.header.feature_dim = feature_length(manifest.channel_count, params.neighbors, mode);
    index.header.entry_count = manifest.entries.size();

    index.entries.resize(manifest.entries.size());
    parallel_for(manifest.entries.size(), jobs, [&](std::size_t i) {
        const ManifestEntry& entry = manifest.entries[i];
        FeatureVector feature = build_feature(load_image(entry.path), params, mode, normalize);
        index.entries[i] = {entry.id, entry.category, std::move(feature.values)};
    });
    return index;
}

}  // namespace mdlp
