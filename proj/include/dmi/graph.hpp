#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmi {

using Weight = std::int64_t;

// Weights are nonnegative integers capped so that sums of up to 3n of them
// stay comfortably inside int64.
constexpr Weight kMaxWeight = Weight(1) << 40;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// Undirected edge of a bipartite graph. u indexes the left side, v the right
// side; both are 0-based internally (1-based in files).
struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 0;
};

class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    // Edge ids incident to left vertex u / right vertex v.
    const std::vector<int>& left_edges(int u) const { return left_[static_cast<size_t>(u)]; }
    const std::vector<int>& right_edges(int v) const { return right_[static_cast<size_t>(v)]; }

    // Edge id joining (u, v), or -1.
    int find_edge(int u, int v) const;

    Weight total_weight() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> left_, right_;
};

// Provenance of an auxiliary-graph arc: the bipartite edge it came from and
// whether it is the reversed (matching) orientation.
struct ArcOrigin {
    int edge_id = -1;
    bool reversed = false;
};

struct Arc {
    int u = 0;
    int v = 0;
    Weight w = 0;
    ArcOrigin origin{};
};

class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs, bool allow_self_loops = false);

    int n() const { return n_; }
    int m() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }

    const std::vector<int>& out_arcs(int u) const { return out_[static_cast<size_t>(u)]; }
    const std::vector<int>& in_arcs(int v) const { return in_[static_cast<size_t>(v)]; }

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
};

// A matching is a set of edge ids of a host graph; validity is re-checked
// against the host on use.
struct Matching {
    std::vector<int> edge_ids;

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool is_perfect(const BipartiteGraph& g) const { return size() == g.n(); }
    Weight weight(const BipartiteGraph& g) const;
    bool is_valid(const BipartiteGraph& g) const;
    // matched right vertex of left u, or -1 (and vice versa)
    std::vector<int> left_to_right(const BipartiteGraph& g) const;
    std::vector<int> right_to_left(const BipartiteGraph& g) const;
    bool contains_edge(int edge_id) const;
};

struct EdgeSet {
    std::vector<int> ids;

    Weight weight(const BipartiteGraph& g) const;
    int size() const { return static_cast<int>(ids.size()); }
    void sort_ids();
};

struct ArcSet {
    std::vector<int> ids;

    Weight weight(const Digraph& d) const;
    int size() const { return static_cast<int>(ids.size()); }
};

// Undirected view of a digraph: antiparallel and duplicate arcs collapse to
// one edge; arc ids that produced each edge are kept.
struct UndirectedView {
    struct ViewEdge {
        int a = 0;
        int b = 0;  // a < b
        Weight w = 0;
        std::vector<int> arc_ids;
    };
    int n = 0;
    std::vector<ViewEdge> edges;
};

// G_M: all edges oriented left-to-right plus matching edges right-to-left.
// Vertices 0..n-1 are the left side, n..2n-1 the right side.
Digraph build_auxiliary(const BipartiteGraph& g, const Matching& m);

UndirectedView underlying(const Digraph& d);

// File formats ("bip"/"dig" headers, 1-based indices, '#' comments).
BipartiteGraph parse_bipartite(const std::string& text);
std::string serialize_bipartite(const BipartiteGraph& g);
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

BipartiteGraph load_bipartite_file(const std::string& path);
Digraph load_digraph_file(const std::string& path);

// Peeks at the header token of a graph file.
enum class GraphKind { Bipartite, Directed };
GraphKind sniff_graph_file(const std::string& path);

}  // namespace dmi
