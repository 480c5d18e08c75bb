#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mdlp/errors.hpp"
#include "mdlp/feature.hpp"

namespace mdlp {

inline constexpr std::uint32_t kIndexVersion = 1;
inline constexpr char kIndexMagic[4] = {'M', 'D', 'L', 'P'};

// Descriptor configuration and entry accounting stored at the front of an
// index file. feature_dim must equal channels * K * 2^neighbors with K in
// {1, 4, 5} depending on the descriptor mode.
struct IndexHeader {
    std::uint32_t version = kIndexVersion;
    std::uint32_t channels = 0;
    std::uint32_t neighbors = 0;
    std::uint32_t radius = 0;
    bool normalized = true;
    std::uint64_t entry_count = 0;
    std::uint64_t feature_dim = 0;
};

// One indexed image: identifier, category label and its signature.
struct IndexEntry {
    std::string id;
    std::uint32_t category = 0;
    std::vector<float> feature;
};

struct IndexData {
    IndexHeader header;
    std::vector<IndexEntry> entries;
};

// Descriptor mode implied by the header's feature dimension.
// Throws ConsistencyError when the dimension fits no mode.
DescriptorMode mode_from_header(const IndexHeader& header);

// Serializes to the binary layout:
//   "MDLP" | u32 version | u32 C | u32 Nb | u32 R | u8 normalized |
//   u64 entry_count | u64 feature_dim |
//   per entry: u32 id_len | id bytes | u32 category | feature_dim * f32
// all little-endian. Contents are written to a temporary file, fsynced and
// renamed into place; returns the byte count. Mixed entry dimensions raise
// ConsistencyError before anything touches disk.
std::uint64_t save_index(const IndexData& index, const std::filesystem::path& path);

// Reads and validates a complete index file. Bad magic -> FormatError,
// unknown version -> VersionError, any shortfall against the declared
// contents -> TruncationError, trailing bytes -> FormatError.
IndexData load_index(const std::filesystem::path& path);

// Parsing core behind load_index, usable on an in-memory buffer.
IndexData parse_index(std::span<const std::byte> bytes);

// Exact serialized size of the payload load_index expects.
std::uint64_t serialized_size(const IndexData& index);

}  // namespace mdlp
