#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace perfcrd {

// Undirected population graph. The group of node i is N(i) plus i itself,
// so group sizes are M_i = degree(i) + 1. Immutable after construction and
// safe to share across threads.
class PopulationGraph {
public:
    PopulationGraph() = default;

    // Validates: ids in [0, node_count), no self-loops, no duplicate edges.
    PopulationGraph(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return node_count_; }
    const std::vector<int>& neighbors(int i) const { return adjacency_.at(i); }
    int degree(int i) const { return static_cast<int>(adjacency_.at(i).size()); }
    int group_size(int i) const { return degree(i) + 1; }

    // Canonical edge list: each pair (i, j) with i < j, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    bool is_complete() const;

    // Edge-list text form: "nodes=<n>" header, then one "i j" line per edge.
    std::string serialize() const;
    static PopulationGraph parse(const std::string& text);

    bool operator==(const PopulationGraph& o) const {
        return node_count_ == o.node_count_ && edges_ == o.edges_;
    }

private:
    int node_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

PopulationGraph make_clique(int n);
PopulationGraph make_path(int n);

// Stored hub constructions where full group success is impossible at
// T=(M_hub-1)/M_hub. Variants: "star3-pendants", "star4-pendants".
PopulationGraph make_hub_counterexample(const std::string& variant);
std::vector<std::string> hub_counterexample_variants();

// Preferential-attachment graph: seed clique on attach_m+1 nodes, then each
// new node attaches attach_m distinct degree-weighted targets. Deterministic
// for a fixed seed; ties in the degree table resolve by node id order.
PopulationGraph make_scale_free(int n, int attach_m, std::uint64_t seed);

}  // namespace perfcrd
