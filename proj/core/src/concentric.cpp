#include "meso/concentric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace meso {
namespace {

double entropy_exp(const std::vector<std::pair<int, double>>& probs) {
    double ent = 0.0;
    for (const auto& [node, p] : probs)
        if (p > 0.0) ent -= p * std::log(p);
    return std::exp(ent);
}

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.adj.resize(static_cast<size_t>(n));
    for (const auto& [a, b] : edges) {
        g.adj[static_cast<size_t>(a)].push_back(b);
        g.adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool is_connected(const Graph& g) {
    if (g.size() == 0) return true;
    std::vector<bool> seen(g.adj.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                count++;
                queue.push_back(v);
            }
        }
    }
    return count == g.size();
}

ConcentricLevels concentric_levels(const Graph& g, int source, int h) {
    if (source < 0 || source >= g.size())
        throw std::runtime_error("source node out of range");
    if (h < 1) throw std::runtime_error("depth h must be >= 1");
    ConcentricLevels out;
    out.source = source;
    out.level_of.assign(g.adj.size(), -1);
    out.levels.assign(static_cast<size_t>(h) + 1, {});
    out.level_of[static_cast<size_t>(source)] = 0;
    out.levels[0] = {source};
    std::vector<int> frontier{source};
    for (int r = 1; r <= h && !frontier.empty(); r++) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int v : g.adj[static_cast<size_t>(u)]) {
                if (out.level_of[static_cast<size_t>(v)] == -1) {
                    out.level_of[static_cast<size_t>(v)] = r;
                    next.push_back(v);
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.levels[static_cast<size_t>(r)] = next;
        frontier = std::move(next);
    }
    return out;
}

double WalkDistribution::total_mass() const {
    double sum = 0.0;
    for (const auto& [node, p] : probs) sum += p;
    return sum;
}

namespace {

// Exact enumeration over visited-set states. The walk takes uniform steps
// over unvisited neighbors; running out of options before h steps drops
// the branch's mass.
void saw_expand(const Graph& g, const std::vector<int>& level_of, int h,
                std::vector<int>& visited, int current, int depth, double prob,
                std::map<int, double>& arrival) {
    if (depth == h) {
        if (level_of[static_cast<size_t>(current)] == h) arrival[current] += prob;
        return;
    }
    int unvisited = 0;
    for (int v : g.adj[static_cast<size_t>(current)])
        if (std::find(visited.begin(), visited.end(), v) == visited.end())
            unvisited++;
    if (unvisited == 0) return;
    const double step = prob / unvisited;
    for (int v : g.adj[static_cast<size_t>(current)]) {
        if (std::find(visited.begin(), visited.end(), v) != visited.end())
            continue;
        visited.push_back(v);
        saw_expand(g, level_of, h, visited, v, depth + 1, step, arrival);
        visited.pop_back();
    }
}

} // namespace

WalkDistribution saw_distribution(const Graph& g, int source, int h) {
    const ConcentricLevels levels = concentric_levels(g, source, h);
    WalkDistribution d;
    d.source = source;
    d.depth = h;
    std::map<int, double> arrival;
    std::vector<int> visited{source};
    saw_expand(g, levels.level_of, h, visited, source, 0, 1.0, arrival);
    d.probs.assign(arrival.begin(), arrival.end());
    return d;
}

double accessibility(const WalkDistribution& d) {
    return entropy_exp(d.probs);
}

double accessibility(const Graph& g, int source, int h) {
    return accessibility(saw_distribution(g, source, h));
}

BackbonePattern backbone(const Graph& g, int source, int h) {
    const ConcentricLevels levels = concentric_levels(g, source, h);
    BackbonePattern p;
    p.source = source;
    p.depth = h;
    p.levels = levels.levels;
    p.level_of = levels.level_of;
    p.outward.assign(g.adj.size(), {});
    p.eta.assign(static_cast<size_t>(h), 0);
    for (int r = 0; r < h; r++) {
        for (int u : p.levels[static_cast<size_t>(r)]) {
            auto& out = p.outward[static_cast<size_t>(u)];
            for (int v : g.adj[static_cast<size_t>(u)])
                if (p.level_of[static_cast<size_t>(v)] == r + 1) out.push_back(v);
            if (out.empty()) p.eta[static_cast<size_t>(r)]++;
        }
    }
    return p;
}

double symmetry(const BackbonePattern& p) {
    const int h = p.depth;
    // Mass flows strictly outward, so a per-node accumulator over level
    // order is exact.
    std::map<int, double> mass{{p.source, 1.0}};
    for (int r = 0; r < h; r++) {
        std::map<int, double> next;
        for (int u : p.levels[static_cast<size_t>(r)]) {
            auto it = mass.find(u);
            if (it == mass.end() || it->second == 0.0) continue;
            const auto& out = p.outward[static_cast<size_t>(u)];
            if (out.empty()) continue; // dead end absorbs the mass
            const double share = it->second / static_cast<double>(out.size());
            for (int v : out) next[v] += share;
        }
        mass = std::move(next);
    }
    std::vector<std::pair<int, double>> arrival(mass.begin(), mass.end());
    double total = 0.0;
    for (const auto& [node, m] : arrival) total += m;

    int eta_sum = 0;
    for (int e : p.eta) eta_sum += e;
    const double denom =
        static_cast<double>(p.levels[static_cast<size_t>(h)].size()) + eta_sum;
    if (total == 0.0) return 0.0;
    return entropy_exp(arrival) / denom;
}

double symmetry(const Graph& g, int source, int h) {
    return symmetry(backbone(g, source, h));
}

NodeMeasures node_measures(const Graph& g, int h) {
    NodeMeasures m;
    m.h = h;
    const int n = g.size();
    m.k.resize(static_cast<size_t>(n));
    m.s.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        m.k[static_cast<size_t>(i)] = accessibility(g, i, h);
        m.s[static_cast<size_t>(i)] = symmetry(g, i, h);
    }
    return m;
}

MeasureSummary summarize(const NodeMeasures& m) {
    MeasureSummary s;
    s.h = m.h;
    const size_t n = m.k.size();
    if (n == 0) return s;
    double sum_k = 0.0, sum_s = 0.0;
    for (size_t i = 0; i < n; i++) {
        sum_k += m.k[i];
        sum_s += m.s[i];
    }
    s.mean_k = sum_k / static_cast<double>(n);
    s.mean_s = sum_s / static_cast<double>(n);
    double var = 0.0;
    for (double k : m.k) var += (k - s.mean_k) * (k - s.mean_k);
    s.std_k = std::sqrt(var / static_cast<double>(n));
    return s;
}

MeasureSummary summarize(const Graph& g, int h) {
    return summarize(node_measures(g, h));
}

} // namespace meso
