#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meso/corpus.hpp"
#include "meso/vectorize.hpp"

namespace meso {

enum class EdgeKind { Similarity, Sequence };

struct Edge {
    int a = 0; // a < b always
    int b = 0;
    EdgeKind kind = EdgeKind::Similarity;
    double weight = 0.0; // meaningful for similarity edges only

    bool operator==(const Edge&) const = default;
};

struct WeightedEdge {
    int a = 0;
    int b = 0;
    double weight = 0.0;
};

/// Undirected paragraph-window network: pruned similarity edges plus the
/// sequence chain i -- i+1. Downstream measures treat it as unweighted;
/// similarity weights are retained as metadata.
struct MesoNetwork {
    int node_count = 0;
    std::vector<Edge> edges; // similarity edges sorted by (a,b), then sequence
    int delta = 1;
    double threshold = 4.0;

    /// Unweighted adjacency lists (both edge kinds), neighbors sorted.
    std::vector<std::vector<int>> adjacency() const;

    /// True for nodes incident to at least one similarity edge.
    std::vector<bool> similarity_incident() const;
};

/// One weighted candidate per unordered pair with |a-b| > delta, including
/// zero-weight pairs. Ordered by (a,b).
std::vector<WeightedEdge> candidate_edges(const std::vector<SparseVector>& vectors,
                                          int delta);

/// Keeps the ceil(n*t/2) strongest candidates so the similarity average
/// degree is about t. Ties break by higher weight, then smaller min index,
/// then smaller max index. Fewer candidates than the budget keeps all.
std::vector<WeightedEdge> prune_to_average_degree(std::vector<WeightedEdge> candidates,
                                                  int node_count, double t);

/// Assembles a network from already-pruned similarity edges, appending the
/// n-1 sequence edges.
MesoNetwork assemble_network(int node_count, int delta, double t,
                             const std::vector<WeightedEdge>& similarity);

/// Full network-modelling stage: windows -> tf-idf -> candidates -> prune
/// -> sequence edges.
MesoNetwork build_network(const OrganizedText& o, int delta, double t);

} // namespace meso
