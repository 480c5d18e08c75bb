#include "mdlp/query.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mdlp {

double d1_distance(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) {
        throw ShapeError("d1 distance needs equal lengths, got " +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double x = a[k];
        double y = b[k];
        sum += std::abs(x - y) / (1.0 + x + y);
    }
    return sum;
}

RankedOrder ranked_order(std::span<const float> query, const std::vector<IndexEntry>& entries) {
    if (entries.empty()) throw EmptyIndexError("cannot rank against an empty index");
    if (query.size() != entries.front().feature.size()) {
        throw ShapeError("query dimension " + std::to_string(query.size()) +
                         " does not match index dimension " +
                         std::to_string(entries.front().feature.size()));
    }

    RankedOrder ranked;
    ranked.distances.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        ranked.distances[i] = d1_distance(query, entries[i].feature);
    }

    ranked.order.resize(entries.size());
    std::iota(ranked.order.begin(), ranked.order.end(), std::size_t{0});
    std::sort(ranked.order.begin(), ranked.order.end(),
              [&](std::size_t lhs, std::size_t rhs) {
                  if (ranked.distances[lhs] != ranked.distances[rhs]) {
                      return ranked.distances[lhs] < ranked.distances[rhs];
                  }
                  if (entries[lhs].id != entries[rhs].id) {
                      return entries[lhs].id < entries[rhs].id;
                  }
                  return lhs < rhs;
              });
    return ranked;
}

RetrievalResult rank_query(std::span<const float> query, const std::vector<IndexEntry>& entries,
                           std::size_t top_k, std::string query_id) {
    RankedOrder ranked = ranked_order(query, entries);

    RetrievalResult result;
    result.query_id = std::move(query_id);
    std::size_t count = std::min(top_k, entries.size());
    result.matches.reserve(count);
    for (std::size_t pos = 0; pos < count; ++pos) {
        std::size_t i = ranked.order[pos];
        result.matches.push_back({entries[i].id, entries[i].category, ranked.distances[i]});
    }
    return result;
}

}  // namespace mdlp
