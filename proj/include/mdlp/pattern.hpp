#pragma once

#include <cstdint>
#include <vector>

#include "mdlp/image.hpp"

namespace mdlp {

// Number of mesh distances fused into the full descriptor (d = 1..4).
inline constexpr int kMeshDistances = 4;

// Sampling-ring geometry plus the mesh distance used by mesh codes.
struct PatternParams {
    int neighbors = 8;      // Nb, even, 4..16
    int radius = 1;         // R, >= 1
    int mesh_distance = 1;  // d, 1..Nb/2 (mesh codes only)
};

// Validates neighbor count and radius; throws ParamError.
void validate_ring_params(const PatternParams& params);
// Additionally validates the mesh distance; throws ParamError.
void validate_mesh_params(const PatternParams& params);

// The center intensity and the Nb ring samples around one pixel.
// Neighbor i (1-based) sits at angle 2*pi*(i-1)/Nb from the positive
// column axis, counter-clockwise with rows growing downward. Values are
// bilinearly interpolated where the ring leaves the pixel grid.
struct NeighborRing {
    double center = 0.0;
    std::vector<double> values;
};

// Thresholding step shared by all codes: 1 for x >= 0, else 0.
inline std::uint32_t sign_bit(double x) { return x >= 0.0 ? 1u : 0u; }

// 1-based ring position compared against position i by a mesh code:
// the neighbor `distance` steps ahead, cyclically.
inline int mesh_partner(int position, int neighbors, int distance) {
    return 1 + (position + neighbors + distance - 1) % neighbors;
}

// Samples the ring around interior pixel (row, col).
// Throws PreconditionError if the full radius-R ring does not fit.
NeighborRing sample_ring(const ChannelImage& img, int row, int col,
                         const PatternParams& params);

// Binary code comparing every neighbor against the center.
std::uint32_t lbp_code(const NeighborRing& ring, const PatternParams& params);

// Mesh code comparing every neighbor against its partner params.mesh_distance
// steps ahead on the ring; the center pixel plays no part.
std::uint32_t lmep_code(const NeighborRing& ring, const PatternParams& params);

enum class PatternKind { kLbp, kLmep };

// Per-pixel codes for one (channel, sub-pattern) pair, covering the
// interior region of the source channel (a crop of width R on every side).
struct PatternPlane {
    int width = 0;
    int height = 0;
    int channel = 0;
    PatternKind kind = PatternKind::kLbp;
    int mesh_distance = 0;  // 0 for LBP planes
    std::vector<std::uint32_t> codes;

    std::uint32_t at(int row, int col) const {
        return codes[static_cast<std::size_t>(row) * width + col];
    }
};

// One full plane of LBP codes for the channel.
PatternPlane lbp_plane(const ChannelImage& img, const PatternParams& params);

// One full plane of mesh codes at params.mesh_distance.
PatternPlane lmep_plane(const ChannelImage& img, const PatternParams& params);

// The five planes of the full descriptor for one channel: the LBP plane
// followed by mesh planes at d = 1..4. Requires neighbors >= 8 so that all
// four mesh distances satisfy d <= Nb/2. Throws SizeError if the image has
// no interior pixel.
std::vector<PatternPlane> mdlp_planes(const ChannelImage& img, const PatternParams& params);

}  // namespace mdlp
