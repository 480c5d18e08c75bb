#include "mdlp/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mdlp/parallel.hpp"

namespace mdlp {
namespace {

std::size_t count_relevant(const RetrievalResult& result, std::uint32_t query_category,
                           std::size_t depth) {
    std::size_t limit = std::min(depth, result.matches.size());
    std::size_t relevant = 0;
    for (std::size_t i = 0; i < limit; ++i) {
        if (result.matches[i].category == query_category) ++relevant;
    }
    return relevant;
}

std::vector<std::size_t> normalized_grid(const std::vector<std::size_t>& grid) {
    if (grid.empty()) throw ParamError("retrieval depth grid is empty");
    for (std::size_t depth : grid) {
        if (depth < 1) throw ParamError("retrieval depths must be >= 1");
    }
    std::vector<std::size_t> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return sorted;
}

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

double precision_at(const RetrievalResult& result, std::uint32_t query_category,
                    std::size_t depth) {
    if (depth < 1) throw ParamError("retrieval depth must be >= 1");
    return static_cast<double>(count_relevant(result, query_category, depth)) /
           static_cast<double>(depth);
}

double recall_at(const RetrievalResult& result, std::uint32_t query_category,
                 std::size_t depth, std::size_t category_size) {
    if (depth < 1) throw ParamError("retrieval depth must be >= 1");
    if (category_size < 1) throw ParamError("category size must be >= 1");
    return static_cast<double>(count_relevant(result, query_category, depth)) /
           static_cast<double>(category_size);
}

EvalReport evaluate(const IndexData& index, const EvalConfig& config) {
    const std::vector<IndexEntry>& entries = index.entries;
    if (entries.empty()) throw EmptyIndexError("cannot evaluate an empty index");

    EvalReport report;
    report.depth_grid = normalized_grid(config.depth_grid);
    report.descriptor = index.header;

    for (const IndexEntry& entry : entries) ++report.category_sizes[entry.category];
    std::size_t min_category = entries.size();
    for (const auto& [category, size] : report.category_sizes) {
        (void)category;
        min_category = std::min(min_category, size);
    }
    report.headline_depth = min_category;

    // Depths evaluated per query: the grid plus the headline depth.
    std::vector<std::size_t> depths = report.depth_grid;
    if (std::find(depths.begin(), depths.end(), report.headline_depth) == depths.end()) {
        depths.push_back(report.headline_depth);
        std::sort(depths.begin(), depths.end());
    }

    std::size_t query_count = entries.size();
    std::size_t depth_count = depths.size();
    std::vector<double> precision(query_count * depth_count);
    std::vector<double> recall(query_count * depth_count);

    parallel_for(query_count, config.jobs, [&](std::size_t q) {
        const IndexEntry& query = entries[q];
        RankedOrder ranked = ranked_order(query.feature, entries);
        std::size_t category_size = report.category_sizes.at(query.category);

        // Walk the ranking once, emitting counters as each depth is passed.
        std::size_t relevant = 0;
        std::size_t next_depth = 0;
        for (std::size_t pos = 0; pos < ranked.order.size() && next_depth < depth_count; ++pos) {
            if (entries[ranked.order[pos]].category == query.category) ++relevant;
            while (next_depth < depth_count && depths[next_depth] == pos + 1) {
                precision[q * depth_count + next_depth] =
                    static_cast<double>(relevant) / static_cast<double>(pos + 1);
                recall[q * depth_count + next_depth] =
                    static_cast<double>(relevant) / static_cast<double>(category_size);
                ++next_depth;
            }
        }
        // Depths beyond the database size: everything relevant was retrieved.
        for (; next_depth < depth_count; ++next_depth) {
            precision[q * depth_count + next_depth] =
                static_cast<double>(relevant) / static_cast<double>(depths[next_depth]);
            recall[q * depth_count + next_depth] =
                static_cast<double>(relevant) / static_cast<double>(category_size);
        }
    });

    // Ordered reduction keeps the report identical across job counts.
    std::vector<double> sum_p(depth_count, 0.0), sum_r(depth_count, 0.0);
    std::map<std::uint32_t, std::pair<std::vector<double>, std::vector<double>>> cat_sums;
    for (const auto& [category, size] : report.category_sizes) {
        (void)size;
        cat_sums[category] = {std::vector<double>(depth_count, 0.0),
                              std::vector<double>(depth_count, 0.0)};
    }
    for (std::size_t q = 0; q < query_count; ++q) {
        auto& [cat_p, cat_r] = cat_sums[entries[q].category];
        for (std::size_t g = 0; g < depth_count; ++g) {
            sum_p[g] += precision[q * depth_count + g];
            sum_r[g] += recall[q * depth_count + g];
            cat_p[g] += precision[q * depth_count + g];
            cat_r[g] += recall[q * depth_count + g];
        }
    }

    auto depth_position = [&](std::size_t depth) {
        return static_cast<std::size_t>(
            std::find(depths.begin(), depths.end(), depth) - depths.begin());
    };

    report.arp.reserve(report.depth_grid.size());
    report.arr.reserve(report.depth_grid.size());
    for (std::size_t depth : report.depth_grid) {
        std::size_t g = depth_position(depth);
        report.arp.push_back(sum_p[g] / static_cast<double>(query_count));
        report.arr.push_back(sum_r[g] / static_cast<double>(query_count));
    }
    report.headline_arr =
        sum_r[depth_position(report.headline_depth)] / static_cast<double>(query_count);

    for (const auto& [category, sums] : cat_sums) {
        CategoryCurve curve;
        double members = static_cast<double>(report.category_sizes.at(category));
        for (std::size_t depth : report.depth_grid) {
            std::size_t g = depth_position(depth);
            curve.arp.push_back(sums.first[g] / members);
            curve.arr.push_back(sums.second[g] / members);
        }
        report.per_category.emplace(category, std::move(curve));
    }
    return report;
}

void write_report_csv(const EvalReport& report, std::ostream& out) {
    out << "n_r,arp,arr\n";
    for (std::size_t g = 0; g < report.depth_grid.size(); ++g) {
        out << report.depth_grid[g] << ',' << fixed6(report.arp[g]) << ','
            << fixed6(report.arr[g]) << '\n';
    }
}

std::string format_report_table(const EvalReport& report, bool per_category) {
    std::ostringstream out;
    out << "entries: " << report.descriptor.entry_count
        << "  categories: " << report.category_sizes.size()
        << "  dim: " << report.descriptor.feature_dim << " ("
        << mode_name(mode_from_header(report.descriptor))
        << ", Nb=" << report.descriptor.neighbors << ", R=" << report.descriptor.radius
        << (report.descriptor.normalized ? ", normalized" : ", raw counts") << ")\n";
    if (!report.dataset_name.empty()) out << "dataset: " << report.dataset_name << "\n";

    char row[64];
    out << "   n_r       ARP       ARR\n";
    for (std::size_t g = 0; g < report.depth_grid.size(); ++g) {
        std::snprintf(row, sizeof(row), "%6zu  %8.6f  %8.6f\n", report.depth_grid[g],
                      report.arp[g], report.arr[g]);
        out << row;
    }
    std::snprintf(row, sizeof(row), "headline ARR at n_r=%zu: %.6f\n",
                  report.headline_depth, report.headline_arr);
    out << row;

    if (per_category) {
        for (const auto& [category, curve] : report.per_category) {
            out << "category " << category << " (" << report.category_sizes.at(category)
                << " images)\n";
            for (std::size_t g = 0; g < report.depth_grid.size(); ++g) {
                std::snprintf(row, sizeof(row), "%6zu  %8.6f  %8.6f\n",
                              report.depth_grid[g], curve.arp[g], curve.arr[g]);
                out << row;
            }
        }
    }
    return out.str();
}

}  // namespace mdlp
