#include "mdlp/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>

#include "mdlp/imageio.hpp"
#include "mdlp/parallel.hpp"

namespace mdlp {
namespace {

const std::set<std::string>& raster_extensions() {
    static const std::set<std::string> kExtensions = {
        ".png", ".jpg", ".jpeg", ".bmp", ".ppm", ".pgm", ".pbm", ".tif", ".tiff", ".webp"};
    return kExtensions;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_raster_file(const std::filesystem::path& path) {
    return raster_extensions().count(lower(path.extension().string())) > 0;
}

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    std::size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::optional<std::uint32_t> parse_category(const std::string& text) {
    std::string t = trim(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        return std::nullopt;
    }
    try {
        return static_cast<std::uint32_t>(std::stoul(t));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::map<std::string, std::uint32_t> read_label_csv(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open label map " + csv_path.string());

    std::map<std::string, std::uint32_t> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string row = trim(line);
        if (row.empty() || row.front() == '#') continue;
        if (line_no == 1 && lower(row) == "relative_path,category_id") continue;

        std::size_t comma = row.rfind(',');
        if (comma == std::string::npos) {
            throw FormatError("label map " + csv_path.string() + " line " +
                              std::to_string(line_no) + " has no comma");
        }
        std::string path = trim(row.substr(0, comma));
        std::optional<std::uint32_t> category = parse_category(row.substr(comma + 1));
        if (path.empty() || !category) {
            throw FormatError("label map " + csv_path.string() + " line " +
                              std::to_string(line_no) + " is not `relative_path,category_id`");
        }
        labels[path] = *category;
    }
    return labels;
}

struct Candidate {
    std::string id;  // root-relative path with '/' separators
    std::filesystem::path path;
};

std::vector<Candidate> scan_root(const std::filesystem::path& root) {
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec)) {
        throw IoError("dataset root " + root.string() + " is not a directory");
    }

    std::vector<Candidate> found;
    for (auto it = std::filesystem::recursive_directory_iterator(root);
         it != std::filesystem::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file()) continue;
        if (it->path().filename().string().front() == '.') continue;
        if (!is_raster_file(it->path())) continue;
        found.push_back({it->path().lexically_relative(root).generic_string(), it->path()});
    }
    std::sort(found.begin(), found.end(),
              [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
    return found;
}

}  // namespace

std::string convention_name(LabelConvention convention) {
    switch (convention) {
        case LabelConvention::kFolders: return "folders";
        case LabelConvention::kCorel: return "corel";
        case LabelConvention::kCsv: return "csv";
    }
    return "unknown";
}

DatasetManifest ingest_directory(const std::filesystem::path& root,
                                 LabelConvention convention,
                                 const std::filesystem::path& csv_path, int jobs) {
    std::vector<Candidate> candidates = scan_root(root);

    DatasetManifest manifest;
    manifest.convention = convention_name(convention);

    std::map<std::string, std::uint32_t> csv_labels;
    if (convention == LabelConvention::kCsv) {
        csv_labels = read_label_csv(csv_path);
        for (const auto& [path, category] : csv_labels) {
            manifest.category_names.emplace(category, std::to_string(category));
            (void)path;
        }
    }

    // Folder convention: category ids follow the sorted order of the
    // top-level directory names, so labeling is reproducible.
    std::map<std::string, std::uint32_t> folder_ids;
    if (convention == LabelConvention::kFolders) {
        std::set<std::string> folders;
        for (const Candidate& candidate : candidates) {
            std::size_t slash = candidate.id.find('/');
            if (slash != std::string::npos) folders.insert(candidate.id.substr(0, slash));
        }
        std::uint32_t next = 0;
        for (const std::string& folder : folders) {
            folder_ids[folder] = next;
            manifest.category_names.emplace(next, folder);
            ++next;
        }
    }

    std::vector<ManifestEntry> labeled;
    labeled.reserve(candidates.size());
    for (const Candidate& candidate : candidates) {
        std::uint32_t category = 0;
        switch (convention) {
            case LabelConvention::kFolders: {
                std::size_t slash = candidate.id.find('/');
                if (slash == std::string::npos) {
                    manifest.warnings.push_back("skipping " + candidate.id +
                                                ": not inside a category folder");
                    continue;
                }
                category = folder_ids.at(candidate.id.substr(0, slash));
                break;
            }
            case LabelConvention::kCorel: {
                std::optional<std::uint32_t> id =
                    parse_category(candidate.path.stem().string());
                if (!id) {
                    manifest.warnings.push_back("skipping " + candidate.id +
                                                ": file stem is not a numeric id");
                    continue;
                }
                category = *id / 100;
                manifest.category_names.emplace(category, std::to_string(category));
                break;
            }
            case LabelConvention::kCsv: {
                auto found = csv_labels.find(candidate.id);
                if (found == csv_labels.end()) {
                    manifest.warnings.push_back("skipping " + candidate.id +
                                                ": not present in the label map");
                    continue;
                }
                category = found->second;
                break;
            }
        }
        labeled.push_back({candidate.id, candidate.path, category});
    }

    if (convention == LabelConvention::kCsv) {
        std::set<std::string> present;
        for (const ManifestEntry& entry : labeled) present.insert(entry.id);
        for (const auto& [path, category] : csv_labels) {
            (void)category;
            if (!present.count(path)) {
                manifest.warnings.push_back("label map row " + path +
                                            " matches no image on disk");
            }
        }
    }

    // Decode probe: drop files that do not decode, record channel counts.
    std::vector<int> channels(labeled.size(), -1);
    std::vector<std::string> decode_errors(labeled.size());
    parallel_for(labeled.size(), jobs, [&](std::size_t i) {
        try {
            channels[i] = load_image(labeled[i].path).channel_count();
        } catch (const Error& e) {
            decode_errors[i] = e.what();
        }
    });

    for (std::size_t i = 0; i < labeled.size(); ++i) {
        if (channels[i] < 0) {
            manifest.warnings.push_back("skipping " + labeled[i].id + ": " + decode_errors[i]);
            continue;
        }
        if (manifest.channel_count == 0) manifest.channel_count = channels[i];
        if (channels[i] != manifest.channel_count) {
            throw ConsistencyError("mixed channel counts: " + labeled[i].id + " has " +
                                   std::to_string(channels[i]) + " channel(s), " +
                                   manifest.entries.front().id + " has " +
                                   std::to_string(manifest.channel_count));
        }
        manifest.entries.push_back(std::move(labeled[i]));
        ++manifest.category_sizes[manifest.entries.back().category];
    }

    if (manifest.entries.empty()) {
        throw EmptyDatasetError("no usable images under " + root.string());
    }
    return manifest;
}

LabeledImage decode_entry(const ManifestEntry& entry) {
    return {entry.id, entry.category, load_image(entry.path)};
}

}  // namespace mdlp
