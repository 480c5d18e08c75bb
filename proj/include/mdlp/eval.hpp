#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mdlp/index.hpp"
#include "mdlp/query.hpp"

namespace mdlp {

// Fraction of the top `depth` ranks occupied by the query's category.
double precision_at(const RetrievalResult& result, std::uint32_t query_category,
                    std::size_t depth);

// Fraction of the query's category retrieved within the top `depth` ranks;
// category_size is the total number of images sharing the query's category.
double recall_at(const RetrievalResult& result, std::uint32_t query_category,
                 std::size_t depth, std::size_t category_size);

struct EvalConfig {
    std::vector<std::size_t> depth_grid;  // retrieval depths, each >= 1
    int jobs = 1;
};

struct CategoryCurve {
    std::vector<double> arp;
    std::vector<double> arr;
};

// Precision/recall curves averaged over every database image used as a
// query once, with per-category breakdowns. The headline recall is taken
// at a depth of the smallest category size, the largest depth at which
// every query can still achieve full recall.
struct EvalReport {
    std::vector<std::size_t> depth_grid;
    std::vector<double> arp;  // mean precision per grid depth
    std::vector<double> arr;  // mean recall per grid depth
    std::map<std::uint32_t, CategoryCurve> per_category;
    std::map<std::uint32_t, std::size_t> category_sizes;
    std::size_t headline_depth = 0;
    double headline_arr = 0.0;
    std::string dataset_name;
    IndexHeader descriptor;
};

// Runs the full protocol: each entry queries the whole database (itself
// included), precision and recall are evaluated at every grid depth and
// averaged. Queries fan out across config.jobs threads; accumulation is
// ordered, so the report is identical for any job count.
EvalReport evaluate(const IndexData& index, const EvalConfig& config);

// CSV rows `n_r,arp,arr` with six decimal places.
void write_report_csv(const EvalReport& report, std::ostream& out);

// Human-readable table; with per_category, one block per category follows.
std::string format_report_table(const EvalReport& report, bool per_category = false);

}  // namespace mdlp
