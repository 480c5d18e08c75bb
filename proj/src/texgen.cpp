#include "mdlp/texgen.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "mdlp/imageio.hpp"
#include "mdlp/tiling.hpp"

namespace mdlp {
namespace {

// Uniform draws straight from the mt19937 stream; std::uniform_real_distribution
// is implementation-defined, raw draws keep the corpus identical everywhere.
double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

struct ClassRecipe {
    double angle;
    double wavelength1, wavelength2;
    double amplitude1, amplitude2;
    bool square_wave;
    double checker_period;     // 0 disables the overlay
    double checker_amplitude;
    double phase[3];
    double offset[3];
    double noise_amplitude;
};

ClassRecipe make_recipe(std::mt19937& rng) {
    ClassRecipe recipe;
    recipe.angle = uniform(rng, 0.0, std::numbers::pi);
    recipe.wavelength1 = uniform(rng, 6.0, 26.0);
    recipe.wavelength2 = recipe.wavelength1 * uniform(rng, 1.6, 3.4);
    recipe.amplitude1 = uniform(rng, 35.0, 65.0);
    recipe.amplitude2 = uniform(rng, 18.0, 45.0);
    recipe.square_wave = uniform(rng, 0.0, 1.0) < 0.5;
    if (uniform(rng, 0.0, 1.0) < 0.5) {
        recipe.checker_period = std::floor(uniform(rng, 6.0, 21.0));
        recipe.checker_amplitude = uniform(rng, 10.0, 30.0);
    } else {
        recipe.checker_period = 0.0;
        recipe.checker_amplitude = 0.0;
    }
    for (int ch = 0; ch < 3; ++ch) recipe.phase[ch] = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    for (int ch = 0; ch < 3; ++ch) recipe.offset[ch] = uniform(rng, -20.0, 20.0);
    recipe.noise_amplitude = uniform(rng, 8.0, 18.0);
    return recipe;
}

std::uint8_t quantize(double v) {
    long r = std::lround(v);
    if (r < 0) r = 0;
    if (r > 255) r = 255;
    return static_cast<std::uint8_t>(r);
}

}  // namespace

std::string texture_class_name(int class_index) {
    char name[16];
    std::snprintf(name, sizeof(name), "tex%02d", class_index);
    return name;
}

MultiChannelImage make_texture(int class_index, const TexGenConfig& config) {
    std::seed_seq seq{config.seed, static_cast<std::uint32_t>(class_index)};
    std::mt19937 rng(seq);
    ClassRecipe recipe = make_recipe(rng);

    const double two_pi = 2.0 * std::numbers::pi;
    const double cos_a = std::cos(recipe.angle);
    const double sin_a = std::sin(recipe.angle);

    MultiChannelImage image;
    for (int ch = 0; ch < 3; ++ch) {
        image.channels.push_back(make_channel(config.size, config.size, 0, ch));
    }

    for (int y = 0; y < config.size; ++y) {
        for (int x = 0; x < config.size; ++x) {
            double u = x * cos_a + y * sin_a;
            double v = -x * sin_a + y * cos_a;
            double checker = 0.0;
            if (recipe.checker_period > 0.0) {
                int cell = static_cast<int>(std::floor(x / recipe.checker_period)) +
                           static_cast<int>(std::floor(y / recipe.checker_period));
                checker = (cell % 2 == 0) ? recipe.checker_amplitude : -recipe.checker_amplitude;
            }
            for (int ch = 0; ch < 3; ++ch) {
                double wave1 = std::sin(two_pi * u / recipe.wavelength1 + recipe.phase[ch]);
                if (recipe.square_wave) wave1 = wave1 >= 0.0 ? 1.0 : -1.0;
                double wave2 = std::sin(two_pi * v / recipe.wavelength2 + 0.6 * recipe.phase[ch]);
                double noise = uniform(rng, -recipe.noise_amplitude, recipe.noise_amplitude);
                double value = 128.0 + recipe.offset[ch] + recipe.amplitude1 * wave1 +
                               recipe.amplitude2 * wave2 + checker + noise;
                image.channels[ch].at(y, x) = quantize(value);
            }
        }
    }
    return image;
}

void write_texture_corpus(const TexGenConfig& config, const std::filesystem::path& out_dir,
                          bool tiles) {
    std::filesystem::create_directories(out_dir);
    for (int cls = 0; cls < config.classes; ++cls) {
        std::string name = texture_class_name(cls);
        MultiChannelImage texture = make_texture(cls, config);
        if (!tiles) {
            save_image(texture, out_dir / (name + ".png"));
            continue;
        }
        std::filesystem::path class_dir = out_dir / name;
        std::filesystem::create_directories(class_dir);
        for (const LabeledImage& tile :
             tile_vistex(texture, name, static_cast<std::uint32_t>(cls))) {
            save_image(tile.image, class_dir / (tile.id + ".png"));
        }
    }
}

}  // namespace mdlp
