#include <iostream>

#include <CLI11.hpp>

#include "mdlp/texgen.hpp"

int main(int argc, char** argv) {
    mdlp::TexGenConfig config;
    std::string output;
    bool full = false;

    CLI::App app{"deterministic texture corpus generator"};
    app.add_option("--out", output, "output directory")->required();
    app.add_option("--classes", config.classes, "number of texture classes")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "corpus seed")->capture_default_str();
    app.add_option("--size", config.size, "texture side length in pixels")
        ->capture_default_str();
    app.add_flag("--full", full, "write full-size textures instead of 128x128 tiles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        mdlp::write_texture_corpus(config, output, !full);
    } catch (const mdlp::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << "wrote " << config.classes << " classes (seed " << config.seed << ") -> "
              << output << "\n";
    return 0;
}
