#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mdlp/index.hpp"

namespace mdlp {

// Sum over components of |a - b| / (1 + a + b). Inputs are histogram
// signatures, so components are non-negative and the denominator is >= 1.
// Throws ShapeError on length mismatch.
double d1_distance(std::span<const float> a, std::span<const float> b);

struct RankedMatch {
    std::string id;
    std::uint32_t category = 0;
    double distance = 0.0;
};

// Top matches in ascending distance order. Ties break lexicographically by
// identifier so repeated runs return identical orderings.
struct RetrievalResult {
    std::string query_id;
    std::vector<RankedMatch> matches;
};

// Entry indices of the full database in rank order (rank 1 first), plus the
// distance of every entry to the query. Shared by rank_query and the
// evaluation harness so both use one tie rule.
struct RankedOrder {
    std::vector<std::size_t> order;
    std::vector<double> distances;
};

RankedOrder ranked_order(std::span<const float> query, const std::vector<IndexEntry>& entries);

// Ranks the database against the query and returns the top_k closest
// entries (all of them when top_k >= database size). Throws EmptyIndexError
// on an empty database and ShapeError on dimension mismatch.
RetrievalResult rank_query(std::span<const float> query, const std::vector<IndexEntry>& entries,
                           std::size_t top_k, std::string query_id = {});

}  // namespace mdlp
