#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "mdlp/image.hpp"

namespace mdlp {

// Procedural texture corpus: every class is a deterministic function of
// (seed, class index), built from two oriented waves, an optional checker
// overlay and per-pixel noise, with per-channel phase and offset so the
// three channels carry related but distinct structure. Tiles cut from one
// class share its statistics without being identical.
struct TexGenConfig {
    int classes = 20;
    int size = 512;
    std::uint32_t seed = 7;
};

std::string texture_class_name(int class_index);

// Renders the full-size texture for one class.
MultiChannelImage make_texture(int class_index, const TexGenConfig& config);

// Writes the corpus under out_dir. With tiles, each class becomes 16
// non-overlapping 128x128 tiles in out_dir/<class>/<class>_r<i>_c<j>.png,
// ready for folder-convention ingestion; otherwise one full-size PNG per
// class is written flat.
void write_texture_corpus(const TexGenConfig& config, const std::filesystem::path& out_dir,
                          bool tiles);

}  // namespace mdlp
