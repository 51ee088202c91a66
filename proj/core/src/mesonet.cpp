#include "meso/mesonet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace meso {

std::vector<std::vector<int>> MesoNetwork::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(node_count));
    for (const Edge& e : edges) {
        adj[static_cast<size_t>(e.a)].push_back(e.b);
        adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::vector<bool> MesoNetwork::similarity_incident() const {
    std::vector<bool> incident(static_cast<size_t>(node_count), false);
    for (const Edge& e : edges) {
        if (e.kind != EdgeKind::Similarity) continue;
        incident[static_cast<size_t>(e.a)] = true;
        incident[static_cast<size_t>(e.b)] = true;
    }
    return incident;
}

std::vector<WeightedEdge> candidate_edges(const std::vector<SparseVector>& vectors,
                                          int delta) {
    const int n = static_cast<int>(vectors.size());
    std::vector<WeightedEdge> candidates;
    if (n > delta + 1) {
        const size_t pairs =
            static_cast<size_t>(n - delta - 1) * static_cast<size_t>(n - delta) / 2;
        candidates.reserve(pairs);
    }
    std::vector<double> norms(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) norms[static_cast<size_t>(i)] = vectors[static_cast<size_t>(i)].norm();
    for (int a = 0; a < n; a++) {
        for (int b = a + delta + 1; b < n; b++) {
            double w = 0.0;
            const double na = norms[static_cast<size_t>(a)];
            const double nb = norms[static_cast<size_t>(b)];
            if (na > 0.0 && nb > 0.0)
                w = dot(vectors[static_cast<size_t>(a)], vectors[static_cast<size_t>(b)]) / (na * nb);
            candidates.push_back({a, b, w});
        }
    }
    return candidates;
}

std::vector<WeightedEdge> prune_to_average_degree(std::vector<WeightedEdge> candidates,
                                                  int node_count, double t) {
    if (t <= 0.0) throw std::runtime_error("average-degree threshold must be > 0");
    const size_t keep = static_cast<size_t>(
        std::ceil(static_cast<double>(node_count) * t / 2.0));
    auto stronger = [](const WeightedEdge& x, const WeightedEdge& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    };
    std::sort(candidates.begin(), candidates.end(), stronger);
    if (candidates.size() > keep) candidates.resize(keep);
    return candidates;
}

MesoNetwork assemble_network(int node_count, int delta, double t,
                             const std::vector<WeightedEdge>& similarity) {
    MesoNetwork g;
    g.node_count = node_count;
    g.delta = delta;
    g.threshold = t;
    g.edges.reserve(similarity.size() + static_cast<size_t>(node_count) - 1);
    for (const WeightedEdge& e : similarity) {
        const int a = std::min(e.a, e.b);
        const int b = std::max(e.a, e.b);
        if (a == b) throw std::runtime_error("self-loop in similarity edges");
        if (b - a <= delta)
            throw std::runtime_error("similarity edge violates |a-b| > delta");
        g.edges.push_back({a, b, EdgeKind::Similarity, e.weight});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    for (size_t i = 1; i < g.edges.size(); i++)
        if (g.edges[i].a == g.edges[i - 1].a && g.edges[i].b == g.edges[i - 1].b)
            throw std::runtime_error("duplicate similarity edge");
    for (int i = 0; i + 1 < node_count; i++)
        g.edges.push_back({i, i + 1, EdgeKind::Sequence, 0.0});
    return g;
}

MesoNetwork build_network(const OrganizedText& o, int delta, double t) {
    const auto vectors = vectorize_text(o, delta);
    auto candidates = candidate_edges(vectors, delta);
    const auto kept =
        prune_to_average_degree(std::move(candidates),
                                static_cast<int>(vectors.size()), t);
    return assemble_network(static_cast<int>(vectors.size()), delta, t, kept);
}

} // namespace meso
