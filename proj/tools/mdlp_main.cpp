#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdlp/dataset.hpp"
#include "mdlp/eval.hpp"
#include "mdlp/imageio.hpp"
#include "mdlp/index.hpp"
#include "mdlp/pipeline.hpp"
#include "mdlp/query.hpp"

namespace {

namespace fs = std::filesystem;

struct Options {
    std::string dataset;
    std::string labels = "folders";
    std::string index_path;
    std::string mode = "mdlp";
    std::string format = "table";
    std::string output;
    std::string query_image;
    std::vector<std::size_t> nr_grid;
    int neighbors = 8;
    int radius = 1;
    int jobs = 1;
    std::size_t top_k = 10;
    bool no_normalize = false;
    bool per_category = false;
};

std::pair<mdlp::LabelConvention, fs::path> parse_labels(const std::string& labels) {
    if (labels == "folders") return {mdlp::LabelConvention::kFolders, {}};
    if (labels == "corel") return {mdlp::LabelConvention::kCorel, {}};
    if (labels.rfind("csv:", 0) == 0) {
        fs::path csv = labels.substr(4);
        if (csv.empty()) throw mdlp::ParamError("--labels csv: needs a file path");
        return {mdlp::LabelConvention::kCsv, csv};
    }
    throw mdlp::ParamError("unknown label convention '" + labels +
                           "' (expected folders, corel or csv:<path>)");
}

void print_warnings(const mdlp::DatasetManifest& manifest) {
    for (const std::string& warning : manifest.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_index(const Options& opt) {
    auto [convention, csv_path] = parse_labels(opt.labels);
    mdlp::PatternParams params{opt.neighbors, opt.radius, 1};
    mdlp::DescriptorMode mode = mdlp::mode_from_name(opt.mode);

    auto start = std::chrono::steady_clock::now();
    mdlp::DatasetManifest manifest =
        mdlp::ingest_directory(opt.dataset, convention, csv_path, opt.jobs);
    print_warnings(manifest);

    mdlp::IndexData index =
        mdlp::build_index(manifest, params, mode, !opt.no_normalize, opt.jobs);
    std::uint64_t bytes = mdlp::save_index(index, opt.index_path);

    std::cout << "indexed " << index.entries.size() << " entries (dim "
              << index.header.feature_dim << ", " << manifest.category_sizes.size()
              << " categories) in " << std::fixed << std::setprecision(2)
              << seconds_since(start) << " s -> " << opt.index_path << " (" << bytes
              << " bytes)\n";
    return 0;
}

int run_query(CLI::App* cmd, const Options& opt) {
    mdlp::IndexData index = mdlp::load_index(opt.index_path);
    mdlp::DescriptorMode mode = mdlp::mode_from_header(index.header);

    if (cmd->count("--mode") > 0 && mdlp::mode_from_name(opt.mode) != mode) {
        std::size_t requested = mdlp::feature_length(
            static_cast<int>(index.header.channels), static_cast<int>(index.header.neighbors),
            mdlp::mode_from_name(opt.mode));
        throw mdlp::ShapeError("requested mode " + opt.mode + " yields dimension " +
                               std::to_string(requested) + ", index has dimension " +
                               std::to_string(index.header.feature_dim));
    }
    if (cmd->count("--nb") > 0 &&
        static_cast<std::uint32_t>(opt.neighbors) != index.header.neighbors) {
        throw mdlp::ConsistencyError("--nb " + std::to_string(opt.neighbors) +
                                     " does not match the index (Nb=" +
                                     std::to_string(index.header.neighbors) + ")");
    }
    if (cmd->count("--radius") > 0 &&
        static_cast<std::uint32_t>(opt.radius) != index.header.radius) {
        throw mdlp::ConsistencyError("--radius " + std::to_string(opt.radius) +
                                     " does not match the index (R=" +
                                     std::to_string(index.header.radius) + ")");
    }

    mdlp::PatternParams params{static_cast<int>(index.header.neighbors),
                               static_cast<int>(index.header.radius), 1};
    mdlp::FeatureVector feature = mdlp::build_feature(
        mdlp::load_image(opt.query_image), params, mode, index.header.normalized);
    if (feature.values.size() != index.header.feature_dim) {
        throw mdlp::ShapeError("query feature dimension " +
                               std::to_string(feature.values.size()) +
                               " does not match index dimension " +
                               std::to_string(index.header.feature_dim) +
                               " (query has " + std::to_string(feature.channels) +
                               " channel(s), index expects " +
                               std::to_string(index.header.channels) + ")");
    }

    mdlp::RetrievalResult result =
        mdlp::rank_query(feature.values, index.entries, opt.top_k, opt.query_image);

    if (opt.format == "csv") {
        std::cout << "rank,id,category,distance\n";
        for (std::size_t i = 0; i < result.matches.size(); ++i) {
            const mdlp::RankedMatch& m = result.matches[i];
            std::cout << i + 1 << ',' << m.id << ',' << m.category << ','
                      << std::fixed << std::setprecision(6) << m.distance << '\n';
        }
    } else {
        std::cout << "top " << result.matches.size() << " matches for " << opt.query_image
                  << "\n rank  distance  category  id\n";
        for (std::size_t i = 0; i < result.matches.size(); ++i) {
            const mdlp::RankedMatch& m = result.matches[i];
            std::cout << std::setw(5) << i + 1 << "  " << std::fixed << std::setprecision(6)
                      << m.distance << "  " << std::setw(8) << m.category << "  " << m.id
                      << '\n';
        }
    }
    return 0;
}

// Default retrieval grid: 1..N for small uniform categories (the tiled
// texture protocol), otherwise every multiple of 10 up to 100.
std::vector<std::size_t> default_grid(const mdlp::EvalReport&,
                                      const std::map<std::uint32_t, std::size_t>& sizes) {
    std::size_t min_size = SIZE_MAX, max_size = 0;
    for (const auto& [category, size] : sizes) {
        (void)category;
        min_size = std::min(min_size, size);
        max_size = std::max(max_size, size);
    }
    std::vector<std::size_t> grid;
    if (min_size == max_size && max_size <= 16) {
        for (std::size_t d = 1; d <= max_size; ++d) grid.push_back(d);
    } else {
        for (std::size_t d = 10; d <= 100; d += 10) grid.push_back(d);
    }
    return grid;
}

int run_evaluate(const Options& opt) {
    mdlp::IndexData index = mdlp::load_index(opt.index_path);

    std::map<std::uint32_t, std::size_t> sizes;
    for (const mdlp::IndexEntry& entry : index.entries) ++sizes[entry.category];

    mdlp::EvalConfig config;
    config.jobs = opt.jobs;
    config.depth_grid = opt.nr_grid.empty() ? default_grid({}, sizes) : opt.nr_grid;

    auto start = std::chrono::steady_clock::now();
    mdlp::EvalReport report = mdlp::evaluate(index, config);
    report.dataset_name = fs::path(opt.index_path).stem().string();

    fs::path csv_path = opt.output.empty()
                            ? fs::path(opt.index_path).replace_extension(".eval.csv")
                            : fs::path(opt.output);
    std::ofstream csv(csv_path);
    if (!csv) throw mdlp::IoError("cannot write report " + csv_path.string());
    mdlp::write_report_csv(report, csv);
    csv.close();

    if (opt.format == "csv") {
        mdlp::write_report_csv(report, std::cout);
    } else {
        std::cout << mdlp::format_report_table(report, opt.per_category);
    }
    std::cerr << "evaluated " << index.entries.size() << " queries in " << std::fixed
              << std::setprecision(2) << seconds_since(start) << " s; report -> "
              << csv_path.string() << "\n";
    return 0;
}

int run_tile(const Options& opt) {
    fs::path root(opt.dataset);
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw mdlp::IoError("tile input " + root.string() + " is not a directory");
    }

    std::vector<fs::path> sources;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_regular_file()) sources.push_back(entry.path());
    }
    std::sort(sources.begin(), sources.end());

    fs::create_directories(opt.output);
    std::size_t tiled = 0, failed = 0;
    for (const fs::path& source : sources) {
        try {
            mdlp::MultiChannelImage image = mdlp::load_image(source);
            std::string stem = source.stem().string();
            std::string ext = source.extension().string();
            fs::path out_dir = fs::path(opt.output) / stem;
            fs::create_directories(out_dir);
            for (const mdlp::LabeledImage& tile : mdlp::tile_vistex(image, stem, 0)) {
                mdlp::save_image(tile.image, out_dir / (tile.id + ext));
            }
            ++tiled;
        } catch (const mdlp::Error& e) {
            std::cerr << "error: " << source.string() << ": " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << "tiled " << tiled << " texture(s) into " << tiled * 16 << " tiles ("
              << failed << " skipped) -> " << opt.output << "\n";
    if (tiled == 0) {
        throw mdlp::EmptyDatasetError("no 512x512 textures found under " + root.string());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"MDLP texture descriptor indexing and retrieval"};
    app.set_config("--config", "", "read defaults from a TOML-style config file");
    app.require_subcommand(1);

    auto add_descriptor_flags = [&](CLI::App* cmd) {
        cmd->add_option("--nb", opt.neighbors, "sampling ring neighbor count")
            ->capture_default_str();
        cmd->add_option("--radius", opt.radius, "sampling ring radius")->capture_default_str();
        cmd->add_option("--mode", opt.mode, "descriptor mode: mdlp, lbp or lmep")
            ->capture_default_str();
        cmd->add_flag("--no-normalize", opt.no_normalize,
                      "store raw histogram counts instead of per-block fractions");
    };

    CLI::App* cmd_index = app.add_subcommand("index", "extract features and write an index");
    cmd_index->add_option("--dataset", opt.dataset, "dataset root directory")->required();
    cmd_index->add_option("--labels", opt.labels, "label convention: folders, corel or csv:<path>")
        ->capture_default_str();
    cmd_index->add_option("--index", opt.index_path, "output index file")->required();
    add_descriptor_flags(cmd_index);
    cmd_index->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();

    CLI::App* cmd_query = app.add_subcommand("query", "rank an index against a query image");
    cmd_query->add_option("image", opt.query_image, "query image file")->required();
    cmd_query->add_option("--index", opt.index_path, "index file")->required();
    cmd_query->add_option("--nr", opt.top_k, "matches to return")->capture_default_str();
    cmd_query->add_option("--format", opt.format, "output format: table or csv")
        ->capture_default_str();
    add_descriptor_flags(cmd_query);

    CLI::App* cmd_eval = app.add_subcommand("evaluate", "run the full retrieval protocol");
    cmd_eval->add_option("--index", opt.index_path, "index file")->required();
    cmd_eval->add_option("--nr-grid", opt.nr_grid, "retrieval depths (comma separated)")
        ->delimiter(',');
    cmd_eval->add_option("--format", opt.format, "stdout format: table or csv")
        ->capture_default_str();
    cmd_eval->add_option("--output", opt.output, "report CSV path (default: <index>.eval.csv)");
    cmd_eval->add_flag("--per-category", opt.per_category, "include per-category tables");
    cmd_eval->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();

    CLI::App* cmd_tile = app.add_subcommand("tile", "split 512x512 textures into 128x128 tiles");
    cmd_tile->add_option("--dataset", opt.dataset, "directory of 512x512 textures")->required();
    cmd_tile->add_option("--output", opt.output, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_index)) return run_index(opt);
        if (app.got_subcommand(cmd_query)) return run_query(cmd_query, opt);
        if (app.got_subcommand(cmd_eval)) return run_evaluate(opt);
        if (app.got_subcommand(cmd_tile)) return run_tile(opt);
    } catch (const mdlp::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mdlp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
