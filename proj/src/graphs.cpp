#include "gpir/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gpir {

StorageGraph from_edge_list(int s, std::vector<std::vector<int>> edges) {
    if (s < 1) throw std::invalid_argument("graph needs at least one server");
    StorageGraph g;
    g.s = s;
    std::map<std::pair<int, int>, int> pair_count;
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() < 2) throw std::invalid_argument("hyperedge has fewer than 2 distinct servers");
        for (int v : e)
            if (v < 1 || v > s) throw std::invalid_argument("hyperedge vertex out of range");
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (++pair_count[{e[i], e[j]}] > 1) g.shared_pair = true;
        g.edges.push_back(std::move(e));
    }
    return g;
}

StorageGraph petersen() {
    // Outer 5-cycle 1..5, spokes to 6..10, inner pentagram.
    std::vector<std::vector<int>> e = {
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
        {6, 8}, {7, 9}, {8, 10}, {6, 9}, {7, 10},
    };
    return from_edge_list(10, e);
}

StorageGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite needs positive part sizes");
    std::vector<std::vector<int>> e;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) e.push_back({i, a + j});
    return from_edge_list(a + b, e);
}

StorageGraph cycle_graph(int c) {
    if (c < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    std::vector<std::vector<int>> e;
    for (int i = 1; i < c; ++i) e.push_back({i, i + 1});
    e.push_back({1, c});
    return from_edge_list(c, e);
}

StorageGraph path_graph(int c) {
    if (c < 2) throw std::invalid_argument("path graph needs at least 2 vertices");
    std::vector<std::vector<int>> e;
    for (int i = 1; i < c; ++i) e.push_back({i, i + 1});
    return from_edge_list(c, e);
}

StorageGraph bowtie() {
    return from_edge_list(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

StorageGraph family(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "bowtie") return bowtie();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string base = name.substr(0, paren);
        std::string args = name.substr(paren + 1, name.size() - paren - 2);
        std::replace(args.begin(), args.end(), ',', ' ');
        std::istringstream in(args);
        if (base == "cycle") {
            int c;
            if (in >> c) return cycle_graph(c);
        } else if (base == "path") {
            int c;
            if (in >> c) return path_graph(c);
        } else if (base == "complete_bipartite") {
            int a, b;
            if (in >> a >> b) return complete_bipartite(a, b);
        }
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

Mat incidence(const StorageGraph& g) {
    Mat m(static_cast<std::size_t>(g.s), static_cast<std::size_t>(g.n()));
    for (int j = 0; j < g.n(); ++j)
        for (int v : g.edges[j]) m.at(v - 1, j) = 1;
    return m;
}

bool is_two_uniform(const StorageGraph& g) {
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [](const std::vector<int>& e) { return e.size() == 2; });
}

int degree(const StorageGraph& g, int v) {
    int d = 0;
    for (const auto& e : g.edges)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

int min_degree(const StorageGraph& g) {
    int d = g.n() + 1;
    for (int v = 1; v <= g.s; ++v) d = std::min(d, degree(g, v));
    return d;
}

std::optional<int> regular_degree(const StorageGraph& g) {
    int d = degree(g, 1);
    for (int v = 2; v <= g.s; ++v)
        if (degree(g, v) != d) return std::nullopt;
    return d;
}

Induced induced(const StorageGraph& g, const std::vector<int>& S) {
    std::vector<int> verts(S);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 1 || v > g.s) throw std::invalid_argument("induced: vertex out of range");
    std::vector<int> remap(g.s + 1, 0);
    for (std::size_t k = 0; k < verts.size(); ++k) remap[verts[k]] = static_cast<int>(k) + 1;

    Induced out;
    out.vertex_ids = verts;
    out.graph.s = static_cast<int>(verts.size());
    for (int j = 0; j < g.n(); ++j) {
        const auto& e = g.edges[j];
        bool all_in = std::all_of(e.begin(), e.end(), [&](int v) { return remap[v] != 0; });
        if (!all_in) continue;
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(remap[v]);
        std::sort(mapped.begin(), mapped.end());
        out.graph.edges.push_back(std::move(mapped));
        out.edge_ids.push_back(j + 1);
    }
    // Recompute the shared-pair flag on the survivors.
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : out.graph.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j2 = i + 1; j2 < e.size(); ++j2)
                if (++pair_count[{e[i], e[j2]}] > 1) out.graph.shared_pair = true;
    return out;
}

namespace {

struct CycleSearch {
    const StorageGraph& g;
    int max_len;
    // incident[v] = (edge id, other endpoint)
    std::vector<std::vector<std::pair<int, int>>> incident;
    std::set<std::vector<int>> seen; // sorted edge-id sets
    std::vector<Cycle> found;
    std::vector<int> path_verts;
    std::vector<int> path_edges;
    std::vector<bool> on_path;
    std::vector<bool> edge_used;

    explicit CycleSearch(const StorageGraph& graph, int ml)
        : g(graph), max_len(ml), incident(graph.s + 1),
          on_path(graph.s + 1, false), edge_used(graph.n() + 1, false) {
        for (int j = 0; j < g.n(); ++j) {
            int a = g.edges[j][0], b = g.edges[j][1];
            incident[a].push_back({j + 1, b});
            incident[b].push_back({j + 1, a});
        }
    }

    void record() {
        std::vector<int> key(path_edges);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        found.push_back({path_verts, path_edges});
    }

    // Extend a path whose vertices are all >= path_verts[0]; close at the root.
    void dfs() {
        int u = path_verts.back();
        int root = path_verts.front();
        for (auto [eid, w] : incident[u]) {
            if (edge_used[eid]) continue;
            if (w == root && path_verts.size() >= 2) {
                path_edges.push_back(eid);
                record();
                path_edges.pop_back();
            } else if (w > root && !on_path[w] &&
                       static_cast<int>(path_verts.size()) < max_len) {
                path_verts.push_back(w);
                path_edges.push_back(eid);
                on_path[w] = true;
                edge_used[eid] = true;
                dfs();
                edge_used[eid] = false;
                on_path[w] = false;
                path_edges.pop_back();
                path_verts.pop_back();
            }
        }
    }

    void run() {
        for (int v0 = 1; v0 <= g.s; ++v0) {
            path_verts = {v0};
            path_edges.clear();
            on_path[v0] = true;
            dfs();
            on_path[v0] = false;
        }
    }
};

} // namespace

std::vector<Cycle> cycles(const StorageGraph& g, int max_len) {
    if (!is_two_uniform(g))
        throw std::invalid_argument("cycle enumeration requires a 2-uniform graph");
    if (max_len < 2) return {};
    CycleSearch search(g, max_len);
    search.run();
    return search.found;
}

std::vector<Cycle> cycles(const StorageGraph& g) { return cycles(g, g.s); }

std::optional<int> girth(const StorageGraph& g) {
    if (!is_two_uniform(g)) throw std::invalid_argument("girth requires a 2-uniform graph");
    std::optional<int> best;
    for (int skip = 0; skip < g.n(); ++skip) {
        int a = g.edges[skip][0], b = g.edges[skip][1];
        // BFS from a to b avoiding the skipped edge.
        std::vector<int> dist(g.s + 1, -1);
        std::vector<int> queue = {a};
        dist[a] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (u == b) break;
            for (int j = 0; j < g.n(); ++j) {
                if (j == skip) continue;
                const auto& e = g.edges[j];
                int w;
                if (e[0] == u) w = e[1];
                else if (e[1] == u) w = e[0];
                else continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[b] != -1) {
            int len = dist[b] + 1;
            if (!best || len < *best) best = len;
        }
    }
    return best;
}

bool is_acyclic(const StorageGraph& g) {
    if (!is_two_uniform(g)) throw std::invalid_argument("is_acyclic requires a 2-uniform graph");
    std::vector<int> parent(g.s + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : g.edges) {
        int ra = find(e[0]), rb = find(e[1]);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

ColoredMultigraph to_colored(const StorageGraph& g) {
    ColoredMultigraph cm;
    cm.s = g.s;
    for (int j = 0; j < g.n(); ++j) {
        const auto& e = g.edges[j];
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t k = i + 1; k < e.size(); ++k)
                cm.edges.push_back({e[i], e[k], j + 1});
    }
    return cm;
}

StorageGraph underlying(const ColoredMultigraph& cm) {
    StorageGraph g;
    g.s = cm.s;
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : cm.edges) {
        g.edges.push_back({e.a, e.b});
        if (++pair_count[{e.a, e.b}] > 1) g.shared_pair = true;
    }
    return g;
}

bool polychromatic_cycle_exists(const ColoredMultigraph& cm, const std::vector<int>& S) {
    std::vector<bool> in_s(cm.s + 1, false);
    for (int v : S) {
        if (v < 1 || v > cm.s) throw std::invalid_argument("vertex out of range");
        in_s[v] = true;
    }
    ColoredMultigraph sub;
    sub.s = cm.s;
    for (const auto& e : cm.edges)
        if (in_s[e.a] && in_s[e.b]) sub.edges.push_back(e);
    StorageGraph plain = underlying(sub);
    for (const Cycle& c : cycles(plain, static_cast<int>(S.size()))) {
        std::set<int> colors;
        for (int eid : c.edge_ids) colors.insert(sub.edges[eid - 1].color);
        if (colors.size() >= 2) return true;
    }
    return false;
}

namespace {

// Strip comments and blank lines, return remaining whitespace-separated tokens
// line by line.
std::vector<std::vector<std::string>> token_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

} // namespace

StorageGraph read_graph(std::istream& in) {
    auto lines = token_lines(in);
    if (lines.empty() || lines[0].size() != 2)
        throw std::invalid_argument("graph file: expected header line \"s n\"");
    int s = std::stoi(lines[0][0]);
    int n = std::stoi(lines[0][1]);
    if (static_cast<int>(lines.size()) != n + 1)
        throw std::invalid_argument("graph file: edge line count does not match header");
    std::vector<std::vector<int>> edges;
    for (int j = 1; j <= n; ++j) {
        std::vector<int> e;
        for (const auto& t : lines[j]) e.push_back(std::stoi(t));
        edges.push_back(std::move(e));
    }
    return from_edge_list(s, std::move(edges));
}

void write_graph(std::ostream& out, const StorageGraph& g) {
    out << g.s << ' ' << g.n() << '\n';
    for (const auto& e : g.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

StorageGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

} // namespace gpir
