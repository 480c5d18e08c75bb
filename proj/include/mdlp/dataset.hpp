#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mdlp/image.hpp"
#include "mdlp/tiling.hpp"

namespace mdlp {

// How category labels are derived from the directory tree:
//   kFolders - the top-level directory under the root names the category
//   kCorel   - numeric file stems, category = stem / 100
//   kCsv     - explicit `relative_path,category_id` rows
enum class LabelConvention { kFolders, kCorel, kCsv };

std::string convention_name(LabelConvention convention);

// One dataset image: identifier (root-relative path), label and location.
// Pixels are decoded on demand, not held here.
struct ManifestEntry {
    std::string id;
    std::filesystem::path path;
    std::uint32_t category = 0;
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;           // lexicographic by id
    std::map<std::uint32_t, std::size_t> category_sizes;
    std::map<std::uint32_t, std::string> category_names;  // folders/csv stems where known
    int channel_count = 0;
    std::string convention;
    std::vector<std::string> warnings;            // skipped files, one line each
};

// Scans root recursively for raster images, assigns labels per the
// convention, verifies every file decodes and that all images share one
// channel count. Undecodable or unlabeled files are skipped with a warning
// record; an empty result raises EmptyDatasetError, mixed channel counts
// raise ConsistencyError. Entry order is lexicographic by relative path.
DatasetManifest ingest_directory(const std::filesystem::path& root,
                                 LabelConvention convention,
                                 const std::filesystem::path& csv_path = {},
                                 int jobs = 1);

// Decodes one manifest entry into a labeled image.
LabeledImage decode_entry(const ManifestEntry& entry);

}  // namespace mdlp
