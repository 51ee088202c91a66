#pragma once

#include <string>
#include <vector>

#include "meso/mesonet.hpp"

namespace meso {

/// Minimal unweighted, undirected graph view used by the node measures.
/// Built from a MesoNetwork or assembled directly in tests.
struct Graph {
    std::vector<std::vector<int>> adj; // sorted neighbor lists, no self-loops

    int size() const { return static_cast<int>(adj.size()); }

    static Graph from_network(const MesoNetwork& g) { return {g.adjacency()}; }
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

bool is_connected(const Graph& g);

/// Breadth-first shells around a source node up to depth h.
/// levels[r] holds the nodes at shortest-path distance r, sorted.
struct ConcentricLevels {
    int source = 0;
    std::vector<std::vector<int>> levels; // size h+1, possibly empty tails
    std::vector<int> level_of;            // distance from source, -1 if > h
};

ConcentricLevels concentric_levels(const Graph& g, int source, int h);

/// Arrival probabilities of an exact h-step self-avoiding walk. Mass lost
/// to dead-ended walks or to walks ending off level h is simply dropped
/// (no renormalization), so the total can be < 1.
struct WalkDistribution {
    int source = 0;
    int depth = 0;
    std::vector<std::pair<int, double>> probs; // (node at level h, mass), sorted

    double total_mass() const;
};

WalkDistribution saw_distribution(const Graph& g, int source, int h);

/// Eq.-style accessibility: exp of the entropy of the (possibly
/// sub-normalized) SAW arrival distribution, with 0*log 0 = 0.
double accessibility(const Graph& g, int source, int h);
double accessibility(const WalkDistribution& d);

/// The radius-h ball around the source with intra-level edges removed.
/// outward[v] lists v's neighbors one level further out; eta[r] counts the
/// level-r dead ends (no outward edge), r < h.
struct BackbonePattern {
    int source = 0;
    int depth = 0;
    std::vector<std::vector<int>> levels;
    std::vector<int> level_of;
    std::vector<std::vector<int>> outward; // indexed by node id, ball nodes only
    std::vector<int> eta;                  // size h
};

BackbonePattern backbone(const Graph& g, int source, int h);

/// Concentric backbone symmetry: outward level-by-level walk on the
/// backbone, dead ends absorbing their mass. 0 when nothing reaches level
/// h; 1 on perfectly symmetric neighborhoods.
double symmetry(const Graph& g, int source, int h);
double symmetry(const BackbonePattern& p);

/// Per-node accessibility and backbone symmetry at one depth.
struct NodeMeasures {
    int h = 0;
    std::vector<double> k; // accessibility per node
    std::vector<double> s; // symmetry per node
};

NodeMeasures node_measures(const Graph& g, int h);

/// Per-book feature record. rs_* are filled by the signature module.
struct MeasureSummary {
    std::string book_id;
    int h = 0;
    double mean_k = 0.0;
    double std_k = 0.0; // population standard deviation
    double mean_s = 0.0;
    double rs_mean = 0.0;
    double rs_std = 0.0;
    bool rs_empty = false;
};

MeasureSummary summarize(const Graph& g, int h);
MeasureSummary summarize(const NodeMeasures& m);

} // namespace meso
