#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "meso/vectorize.hpp"

namespace meso {

struct FeatureRecord {
    std::string book_id;
    std::string label;
    std::map<std::string, double> features;
};

/// RMSE between the two group centroids after z-standardizing each named
/// feature over the pooled set. Zero-variance features contribute 0 and
/// are reported back.
struct SeparationReport {
    double rmse = 0.0;
    std::vector<std::string> degenerate_features;
};

SeparationReport rmse_separation(const std::vector<FeatureRecord>& group_a,
                                 const std::vector<FeatureRecord>& group_b,
                                 const std::vector<std::string>& feature_names);

/// Product-moment correlation. Requires equal lengths >= 3 and non-zero
/// variance in both series.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Rank correlation with average ranks for ties.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Genre co-membership graph: nodes are genre strings, edge weights count
/// the books sharing both genres.
struct GenreGraph {
    std::vector<std::string> genres; // node id -> genre string
    std::map<std::string, int> genre_id;
    std::map<std::pair<int, int>, int> edge_weights; // (a<b) -> count
};

GenreGraph bipartite_project(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& books);

/// Louvain community detection (weighted modularity, resolution 1.0).
/// Node visiting order is seeded, so a given (graph, seed) pair always
/// produces the same partition. Community ids are dense, renumbered by
/// first appearance in node order.
std::vector<int> detect_communities(const GenreGraph& g, std::uint64_t seed);

double modularity(const GenreGraph& g, const std::vector<int>& partition);

/// fiction iff strictly more than half of the book's known genres fall in
/// fiction communities; ties and unmapped-only books go to "others".
/// Unknown genres are skipped and reported through `unknown_genres`.
std::string label_book(const std::vector<std::string>& genres,
                       const GenreGraph& g, const std::vector<int>& partition,
                       const std::vector<int>& fiction_communities,
                       std::vector<std::string>* unknown_genres = nullptr);

/// Two-component PCA by deflated power iteration on the mean-centered data,
/// tolerance 1e-9, at most 10000 iterations per component. Component sign
/// is fixed by making the largest-magnitude loading positive.
struct Pca2Result {
    std::vector<std::pair<double, double>> points; // projection per row
    std::vector<double> component1;
    std::vector<double> component2;
    double variance1 = 0.0; // projected variance along each component
    double variance2 = 0.0;
    int iterations1 = 0;
    int iterations2 = 0;
};

Pca2Result pca2(const std::vector<SparseVector>& rows, int dimension);
Pca2Result pca2(const std::vector<std::vector<double>>& rows);

} // namespace meso
