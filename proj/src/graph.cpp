#include "dmi/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dmi {

BipartiteGraph::BipartiteGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw Error("vertex count negative");
    left_.assign(static_cast<size_t>(n_), {});
    right_.assign(static_cast<size_t>(n_), {});
    std::set<std::pair<int, int>> seen;
    for (size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.u < 0 || e.u >= n_) throw Error("left index out of range");
        if (e.v < 0 || e.v >= n_) throw Error("right index out of range");
        if (e.w < 0) throw Error("negative weight");
        if (e.w > kMaxWeight) throw Error("weight exceeds cap");
        if (!seen.insert({e.u, e.v}).second) throw Error("duplicate edge");
        left_[static_cast<size_t>(e.u)].push_back(static_cast<int>(id));
        right_[static_cast<size_t>(e.v)].push_back(static_cast<int>(id));
    }
}

int BipartiteGraph::find_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    for (int id : left_[static_cast<size_t>(u)])
        if (edges_[static_cast<size_t>(id)].v == v) return id;
    return -1;
}

Weight BipartiteGraph::total_weight() const {
    Weight s = 0;
    for (const Edge& e : edges_) s += e.w;
    return s;
}

Digraph::Digraph(int n, std::vector<Arc> arcs, bool allow_self_loops)
    : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw Error("vertex count negative");
    out_.assign(static_cast<size_t>(n_), {});
    in_.assign(static_cast<size_t>(n_), {});
    for (size_t id = 0; id < arcs_.size(); ++id) {
        const Arc& a = arcs_[id];
        if (a.u < 0 || a.u >= n_ || a.v < 0 || a.v >= n_)
            throw Error("vertex index out of range");
        if (a.u == a.v && !allow_self_loops) throw Error("self-loop");
        if (a.w < 0) throw Error("negative weight");
        if (a.w > kMaxWeight) throw Error("weight exceeds cap");
        out_[static_cast<size_t>(a.u)].push_back(static_cast<int>(id));
        in_[static_cast<size_t>(a.v)].push_back(static_cast<int>(id));
    }
}

Weight Matching::weight(const BipartiteGraph& g) const {
    Weight s = 0;
    for (int id : edge_ids) s += g.edge(id).w;
    return s;
}

bool Matching::is_valid(const BipartiteGraph& g) const {
    std::vector<char> lu(static_cast<size_t>(g.n()), 0), rv(static_cast<size_t>(g.n()), 0);
    for (int id : edge_ids) {
        if (id < 0 || id >= g.m()) return false;
        const Edge& e = g.edge(id);
        if (lu[static_cast<size_t>(e.u)] || rv[static_cast<size_t>(e.v)]) return false;
        lu[static_cast<size_t>(e.u)] = rv[static_cast<size_t>(e.v)] = 1;
    }
    return true;
}

std::vector<int> Matching::left_to_right(const BipartiteGraph& g) const {
    std::vector<int> to(static_cast<size_t>(g.n()), -1);
    for (int id : edge_ids) to[static_cast<size_t>(g.edge(id).u)] = g.edge(id).v;
    return to;
}

std::vector<int> Matching::right_to_left(const BipartiteGraph& g) const {
    std::vector<int> to(static_cast<size_t>(g.n()), -1);
    for (int id : edge_ids) to[static_cast<size_t>(g.edge(id).v)] = g.edge(id).u;
    return to;
}

bool Matching::contains_edge(int edge_id) const {
    return std::find(edge_ids.begin(), edge_ids.end(), edge_id) != edge_ids.end();
}

Weight EdgeSet::weight(const BipartiteGraph& g) const {
    Weight s = 0;
    for (int id : ids) s += g.edge(id).w;
    return s;
}

void EdgeSet::sort_ids() { std::sort(ids.begin(), ids.end()); }

Weight ArcSet::weight(const Digraph& d) const {
    Weight s = 0;
    for (int id : ids) s += d.arc(id).w;
    return s;
}

Digraph build_auxiliary(const BipartiteGraph& g, const Matching& m) {
    if (!m.is_valid(g) || !m.is_perfect(g)) throw Error("matching not perfect");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(g.m() + g.n()));
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        arcs.push_back({e.u, g.n() + e.v, e.w, {id, false}});
    }
    std::vector<int> sorted = m.edge_ids;
    std::sort(sorted.begin(), sorted.end());
    for (int id : sorted) {
        const Edge& e = g.edge(id);
        arcs.push_back({g.n() + e.v, e.u, e.w, {id, true}});
    }
    return Digraph(2 * g.n(), std::move(arcs));
}

UndirectedView underlying(const Digraph& d) {
    UndirectedView view;
    view.n = d.n();
    std::map<std::pair<int, int>, size_t> index;
    for (int id = 0; id < d.m(); ++id) {
        const Arc& a = d.arc(id);
        std::pair<int, int> key{std::min(a.u, a.v), std::max(a.u, a.v)};
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, view.edges.size());
            view.edges.push_back({key.first, key.second, a.w, {id}});
        } else {
            view.edges[it->second].arc_ids.push_back(id);
        }
    }
    return view;
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos || line[pos] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

[[noreturn]] void fail(const std::string& what, int line) {
    throw ParseError(what + " (line " + std::to_string(line) + ")");
}

bool parse_int(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (size_t j = i; j < tok.size(); ++j)
        if (tok[j] < '0' || tok[j] > '9') return false;
    try {
        out = std::stoll(tok);
    } catch (...) {
        return false;
    }
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

struct Header {
    int n, m, line;
};

Header parse_header(const std::vector<Line>& lines, const std::string& magic) {
    if (lines.empty()) throw ParseError("malformed header (line 1)");
    auto toks = tokens(lines[0].text);
    std::int64_t n = 0, m = 0;
    if (toks.size() != 3 || toks[0] != magic || !parse_int(toks[1], n) ||
        !parse_int(toks[2], m) || n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000)
        fail("malformed header", lines[0].number);
    return {static_cast<int>(n), static_cast<int>(m), lines[0].number};
}

}  // namespace

BipartiteGraph parse_bipartite(const std::string& text) {
    auto lines = content_lines(text);
    Header h = parse_header(lines, "bip");
    if (static_cast<int>(lines.size()) - 1 != h.m)
        throw ParseError("edge count mismatch: header says " + std::to_string(h.m) +
                         ", found " + std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= h.m; ++i) {
        const Line& ln = lines[static_cast<size_t>(i)];
        auto toks = tokens(ln.text);
        std::int64_t u = 0, v = 0, w = 0;
        if (toks.size() != 3 || !parse_int(toks[0], u) || !parse_int(toks[1], v) ||
            !parse_int(toks[2], w))
            fail("malformed edge line", ln.number);
        if (u < 1 || u > h.n) fail("left index out of range", ln.number);
        if (v < 1 || v > h.n) fail("right index out of range", ln.number);
        if (w < 0) fail("negative weight", ln.number);
        if (w > kMaxWeight) fail("weight exceeds cap", ln.number);
        if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
            fail("duplicate edge", ln.number);
        edges.push_back({static_cast<int>(u) - 1, static_cast<int>(v) - 1, w});
    }
    return BipartiteGraph(h.n, std::move(edges));
}

std::string serialize_bipartite(const BipartiteGraph& g) {
    std::vector<Edge> sorted = g.edges();
    std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::ostringstream out;
    out << "bip " << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : sorted)
        out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return out.str();
}

Digraph parse_digraph(const std::string& text) {
    auto lines = content_lines(text);
    Header h = parse_header(lines, "dig");
    if (static_cast<int>(lines.size()) - 1 != h.m)
        throw ParseError("arc count mismatch: header says " + std::to_string(h.m) +
                         ", found " + std::to_string(lines.size() - 1));
    std::vector<Arc> arcs;
    std::set<std::pair<int, int>> seen;
    for (int i = 1; i <= h.m; ++i) {
        const Line& ln = lines[static_cast<size_t>(i)];
        auto toks = tokens(ln.text);
        std::int64_t u = 0, v = 0, w = 0;
        if (toks.size() != 3 || !parse_int(toks[0], u) || !parse_int(toks[1], v) ||
            !parse_int(toks[2], w))
            fail("malformed arc line", ln.number);
        if (u < 1 || u > h.n || v < 1 || v > h.n) fail("vertex index out of range", ln.number);
        if (u == v) fail("self-loop", ln.number);
        if (w < 0) fail("negative weight", ln.number);
        if (w > kMaxWeight) fail("weight exceeds cap", ln.number);
        if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
            fail("duplicate arc", ln.number);
        arcs.push_back({static_cast<int>(u) - 1, static_cast<int>(v) - 1, w, {}});
    }
    return Digraph(h.n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& d) {
    std::vector<Arc> sorted = d.arcs();
    std::sort(sorted.begin(), sorted.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::ostringstream out;
    out << "dig " << d.n() << ' ' << d.m() << '\n';
    for (const Arc& a : sorted)
        out << a.u + 1 << ' ' << a.v + 1 << ' ' << a.w << '\n';
    return out.str();
}

namespace {
std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

BipartiteGraph load_bipartite_file(const std::string& path) {
    return parse_bipartite(read_file(path));
}

Digraph load_digraph_file(const std::string& path) {
    return parse_digraph(read_file(path));
}

GraphKind sniff_graph_file(const std::string& path) {
    auto lines = content_lines(read_file(path));
    if (!lines.empty()) {
        auto toks = tokens(lines[0].text);
        if (!toks.empty() && toks[0] == "bip") return GraphKind::Bipartite;
        if (!toks.empty() && toks[0] == "dig") return GraphKind::Directed;
    }
    throw ParseError("malformed header (line 1)");
}

}  // namespace dmi
