#include "perfcrd/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "perfcrd/errors.hpp"
#include "perfcrd/rng.hpp"

namespace perfcrd {

PopulationGraph::PopulationGraph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 1) throw std::invalid_argument("graph: node count must be positive");
    for (auto& [a, b] : edges_) {
        if (a == b) throw std::invalid_argument("graph: self-loop at node " + std::to_string(a));
        if (a < 0 || b < 0 || a >= node_count_ || b >= node_count_)
            throw std::invalid_argument("graph: node id out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
    adjacency_.assign(node_count_, {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool PopulationGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

bool PopulationGraph::is_complete() const {
    const long long n = node_count_;
    return static_cast<long long>(edges_.size()) == n * (n - 1) / 2;
}

std::string PopulationGraph::serialize() const {
    std::string out = "nodes=" + std::to_string(node_count_);
    for (const auto& [a, b] : edges_)
        out += "\n" + std::to_string(a) + " " + std::to_string(b);
    return out;
}

PopulationGraph PopulationGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1 || n < 0) {
            if (line.rfind("nodes=", 0) != 0)
                throw ConfigError("graph parse: line " + std::to_string(line_no) +
                                  ": expected 'nodes=<n>' header");
            try {
                n = std::stoi(line.substr(6));
            } catch (const std::exception&) {
                throw ConfigError("graph parse: line " + std::to_string(line_no) +
                                  ": bad node count");
            }
            if (n < 1)
                throw ConfigError("graph parse: line " + std::to_string(line_no) +
                                  ": node count must be positive");
            continue;
        }
        std::istringstream ls(line);
        long a, b;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest))
            throw ConfigError("graph parse: line " + std::to_string(line_no) +
                              ": expected 'i j' edge");
        for (long id : {a, b})
            if (id < 0 || id >= n)
                throw ConfigError("graph parse: line " + std::to_string(line_no) + ": node id " +
                                  std::to_string(id) + " out of range");
        if (a == b)
            throw ConfigError("graph parse: line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw ConfigError("graph parse: missing 'nodes=<n>' header");
    try {
        return PopulationGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("graph parse: ") + e.what());
    }
}

PopulationGraph make_clique(int n) {
    if (n < 1) throw std::invalid_argument("make_clique: n must be positive");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return PopulationGraph(n, std::move(edges));
}

PopulationGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be positive");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return PopulationGraph(n, std::move(edges));
}

namespace {

// Hub of degree d at node 0, spokes 1..d, one pendant leaf per spoke.
// Spokes have group size 3 < d+1 and a degree-1 pendant neighbor, so the
// hub unattainability conditions hold at T = d/(d+1) for d >= 3.
PopulationGraph make_star_pendants(int spokes) {
    std::vector<std::pair<int, int>> edges;
    for (int s = 1; s <= spokes; ++s) {
        edges.emplace_back(0, s);
        edges.emplace_back(s, spokes + s);
    }
    return PopulationGraph(2 * spokes + 1, std::move(edges));
}

}  // namespace

PopulationGraph make_hub_counterexample(const std::string& variant) {
    if (variant == "star3-pendants") return make_star_pendants(3);
    if (variant == "star4-pendants") return make_star_pendants(4);
    throw std::invalid_argument("make_hub_counterexample: unknown variant '" + variant + "'");
}

std::vector<std::string> hub_counterexample_variants() {
    return {"star3-pendants", "star4-pendants"};
}

PopulationGraph make_scale_free(int n, int attach_m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("make_scale_free: n must be positive");
    if (attach_m < 1 || attach_m >= n)
        throw std::invalid_argument("make_scale_free: need 1 <= attach_m < n");
    const int m0 = std::min(attach_m + 1, n);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree_table;  // node id repeated once per unit of degree
    for (int i = 0; i < m0; ++i)
        for (int j = i + 1; j < m0; ++j) {
            edges.emplace_back(i, j);
            degree_table.push_back(i);
            degree_table.push_back(j);
        }
    Rng rng(seed);
    std::set<int> targets;
    for (int v = m0; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < attach_m) {
            const int t = degree_table[rng.next_below(degree_table.size())];
            targets.insert(t);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            degree_table.push_back(t);
            degree_table.push_back(v);
        }
    }
    return PopulationGraph(n, std::move(edges));
}

}  // namespace perfcrd
