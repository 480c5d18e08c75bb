#include "mdlp/pattern.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mdlp {
namespace {

// One ring sample position, resolved against the pixel grid ahead of time.
// Grid-aligned taps read a single pixel; the rest blend four corners.
struct RingTap {
    bool on_grid = false;
    int dr = 0, dc = 0;      // offset of the pixel (or top-left corner)
    double fr = 0.0, fc = 0.0;  // fractional position inside the corner cell
};

constexpr double kSnapEps = 1e-9;

// Splits a real offset into integer corner + fraction, snapping values that
// are integers up to floating noise so axis-aligned taps stay exact.
void split_offset(double offset, int& corner, double& frac) {
    double nearest = std::round(offset);
    if (std::abs(offset - nearest) < kSnapEps) {
        corner = static_cast<int>(nearest);
        frac = 0.0;
        return;
    }
    double fl = std::floor(offset);
    corner = static_cast<int>(fl);
    frac = offset - fl;
}

std::vector<RingTap> make_taps(const PatternParams& params) {
    std::vector<RingTap> taps(params.neighbors);

    // The canonical 8-neighbor, radius-1 configuration is the classic 3x3
    // neighborhood: diagonal samples land on the corner pixels rather than
    // on the unit circle, so no interpolation happens at all.
    if (params.neighbors == 8 && params.radius == 1) {
        static constexpr int kOffsets[8][2] = {
            {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}};
        for (int i = 0; i < 8; ++i) {
            taps[i].on_grid = true;
            taps[i].dr = kOffsets[i][0];
            taps[i].dc = kOffsets[i][1];
        }
        return taps;
    }

    for (int i = 0; i < params.neighbors; ++i) {
        double angle = 2.0 * std::numbers::pi * i / params.neighbors;
        double dc = params.radius * std::cos(angle);
        double dr = -params.radius * std::sin(angle);

        RingTap& tap = taps[i];
        split_offset(dr, tap.dr, tap.fr);
        split_offset(dc, tap.dc, tap.fc);
        tap.on_grid = tap.fr == 0.0 && tap.fc == 0.0;
    }
    return taps;
}

// Bilinear read via two lerps; exact when all four corners are equal, so
// constant regions never pick up rounding noise.
double sample_tap(const ChannelImage& img, int row, int col, const RingTap& tap) {
    if (tap.on_grid) return img.at(row + tap.dr, col + tap.dc);

    double v00 = img.at(row + tap.dr, col + tap.dc);
    double v01 = img.at(row + tap.dr, col + tap.dc + 1);
    double v10 = img.at(row + tap.dr + 1, col + tap.dc);
    double v11 = img.at(row + tap.dr + 1, col + tap.dc + 1);
    double top = v00 + tap.fc * (v01 - v00);
    double bottom = v10 + tap.fc * (v11 - v10);
    return top + tap.fr * (bottom - top);
}

void fill_ring(const ChannelImage& img, int row, int col,
               const std::vector<RingTap>& taps, NeighborRing& ring) {
    ring.center = img.at(row, col);
    ring.values.resize(taps.size());
    for (std::size_t i = 0; i < taps.size(); ++i) {
        ring.values[i] = sample_tap(img, row, col, taps[i]);
    }
}

void require_interior(const ChannelImage& img, int row, int col, int radius) {
    if (row < radius || col < radius || row >= img.height - radius ||
        col >= img.width - radius) {
        throw PreconditionError("pixel (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") has no full radius-" +
                                std::to_string(radius) + " ring inside " +
                                std::to_string(img.width) + "x" +
                                std::to_string(img.height));
    }
}

void require_interior_exists(const ChannelImage& img, int radius) {
    int minimum = 2 * radius + 1;
    if (img.width < minimum || img.height < minimum) {
        throw SizeError("image " + std::to_string(img.width) + "x" +
                        std::to_string(img.height) + " is smaller than " +
                        std::to_string(minimum) + "x" + std::to_string(minimum) +
                        " required for radius " + std::to_string(radius));
    }
}

std::uint32_t lbp_from_ring(const NeighborRing& ring) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < ring.values.size(); ++i) {
        code |= sign_bit(ring.values[i] - ring.center) << i;
    }
    return code;
}

std::uint32_t lmep_from_ring(const NeighborRing& ring, int neighbors, int distance) {
    std::uint32_t code = 0;
    for (int i = 1; i <= neighbors; ++i) {
        int partner = mesh_partner(i, neighbors, distance);
        code |= sign_bit(ring.values[partner - 1] - ring.values[i - 1]) << (i - 1);
    }
    return code;
}

PatternPlane make_plane(const ChannelImage& img, const PatternParams& params,
                        PatternKind kind, int mesh_distance) {
    PatternPlane plane;
    plane.width = img.width - 2 * params.radius;
    plane.height = img.height - 2 * params.radius;
    plane.channel = img.channel;
    plane.kind = kind;
    plane.mesh_distance = mesh_distance;
    plane.codes.resize(static_cast<std::size_t>(plane.width) * plane.height);
    return plane;
}

}  // namespace

void validate_ring_params(const PatternParams& params) {
    if (params.neighbors < 4 || params.neighbors > 16 || params.neighbors % 2 != 0) {
        throw ParamError("neighbor count must be even and within [4, 16], got " +
                         std::to_string(params.neighbors));
    }
    if (params.radius < 1) {
        throw ParamError("radius must be >= 1, got " + std::to_string(params.radius));
    }
}

void validate_mesh_params(const PatternParams& params) {
    validate_ring_params(params);
    if (params.mesh_distance < 1 || params.mesh_distance > params.neighbors / 2) {
        throw ParamError("mesh distance must be within [1, " +
                         std::to_string(params.neighbors / 2) + "], got " +
                         std::to_string(params.mesh_distance));
    }
}

NeighborRing sample_ring(const ChannelImage& img, int row, int col,
                         const PatternParams& params) {
    validate_ring_params(params);
    require_interior(img, row, col, params.radius);

    NeighborRing ring;
    fill_ring(img, row, col, make_taps(params), ring);
    return ring;
}

std::uint32_t lbp_code(const NeighborRing& ring, const PatternParams& params) {
    validate_ring_params(params);
    return lbp_from_ring(ring);
}

std::uint32_t lmep_code(const NeighborRing& ring, const PatternParams& params) {
    validate_mesh_params(params);
    return lmep_from_ring(ring, params.neighbors, params.mesh_distance);
}

PatternPlane lbp_plane(const ChannelImage& img, const PatternParams& params) {
    validate_ring_params(params);
    require_interior_exists(img, params.radius);

    PatternPlane plane = make_plane(img, params, PatternKind::kLbp, 0);
    std::vector<RingTap> taps = make_taps(params);
    NeighborRing ring;
    int radius = params.radius;
    for (int r = 0; r < plane.height; ++r) {
        for (int c = 0; c < plane.width; ++c) {
            fill_ring(img, r + radius, c + radius, taps, ring);
            plane.codes[static_cast<std::size_t>(r) * plane.width + c] = lbp_from_ring(ring);
        }
    }
    return plane;
}

PatternPlane lmep_plane(const ChannelImage& img, const PatternParams& params) {
    validate_mesh_params(params);
    require_interior_exists(img, params.radius);

    PatternPlane plane = make_plane(img, params, PatternKind::kLmep, params.mesh_distance);
    std::vector<RingTap> taps = make_taps(params);
    NeighborRing ring;
    int radius = params.radius;
    for (int r = 0; r < plane.height; ++r) {
        for (int c = 0; c < plane.width; ++c) {
            fill_ring(img, r + radius, c + radius, taps, ring);
            plane.codes[static_cast<std::size_t>(r) * plane.width + c] =
                lmep_from_ring(ring, params.neighbors, params.mesh_distance);
        }
    }
    return plane;
}

std::vector<PatternPlane> mdlp_planes(const ChannelImage& img, const PatternParams& params) {
    validate_ring_params(params);
    if (params.neighbors < 2 * kMeshDistances) {
        throw ParamError("the full descriptor uses mesh distances 1..4 and needs "
                         "at least 8 neighbors, got " + std::to_string(params.neighbors));
    }
    require_interior_exists(img, params.radius);

    std::vector<PatternPlane> planes;
    planes.reserve(1 + kMeshDistances);
    planes.push_back(make_plane(img, params, PatternKind::kLbp, 0));
    for (int d = 1; d <= kMeshDistances; ++d) {
        planes.push_back(make_plane(img, params, PatternKind::kLmep, d));
    }

    // One ring sample feeds all five codes per pixel.
    std::vector<RingTap> taps = make_taps(params);
    NeighborRing ring;
    int radius = params.radius;
    int width = planes[0].width;
    int height = planes[0].height;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            fill_ring(img, r + radius, c + radius, taps, ring);
            std::size_t offset = static_cast<std::size_t>(r) * width + c;
            planes[0].codes[offset] = lbp_from_ring(ring);
            for (int d = 1; d <= kMeshDistances; ++d) {
                planes[d].codes[offset] = lmep_from_ring(ring, params.neighbors, d);
            }
        }
    }
    return planes;
}

}  // namespace mdlp
