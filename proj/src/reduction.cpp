#include "gpir/reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace gpir {

int color_count(const ColoredMultigraph& cm) {
    int n = 0;
    for (const auto& e : cm.edges) n = std::max(n, e.color);
    return n;
}

bool valid_choice(const ColoredMultigraph& cm, const ChoiceFunction& c) {
    int n = color_count(cm);
    if (static_cast<int>(c.chosen.size()) != n) return false;
    for (int i = 1; i <= n; ++i) {
        int idx = c.chosen[i - 1];
        if (idx < 0 || idx >= static_cast<int>(cm.edges.size())) return false;
        if (cm.edges[idx].color != i) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> candidates_by_color(const ColoredMultigraph& cm) {
    int n = color_count(cm);
    std::vector<std::vector<int>> cand(n);
    for (int k = 0; k < static_cast<int>(cm.edges.size()); ++k)
        cand[cm.edges[k].color - 1].push_back(k);
    for (int i = 0; i < n; ++i)
        if (cand[i].empty()) throw std::invalid_argument("a color has no candidate edges");
    return cand;
}

} // namespace

ChoiceFunction random_choice(const ColoredMultigraph& cm, Rng& rng) {
    auto cand = candidates_by_color(cm);
    ChoiceFunction c;
    for (const auto& options : cand)
        c.chosen.push_back(options[uniform_below(rng, options.size())]);
    return c;
}

StorageGraph pruned_graph(const ColoredMultigraph& cm, const ChoiceFunction& c) {
    if (!valid_choice(cm, c)) throw std::invalid_argument("invalid choice function");
    std::vector<std::vector<int>> edges;
    for (int idx : c.chosen) edges.push_back({cm.edges[idx].a, cm.edges[idx].b});
    return from_edge_list(cm.s, std::move(edges));
}

namespace {

// Shortest path between a and b among the picked pairs; -1 if disconnected.
int picked_distance(const std::vector<std::vector<int>>& adj, int a, int b) {
    if (a == b) return 0;
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u]) {
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            if (w == b) return dist[w];
            q.push(w);
        }
    }
    return -1;
}

struct ChoiceSearch {
    const ColoredMultigraph& cm;
    int g;
    std::vector<std::vector<int>> cand;
    std::vector<std::vector<int>> adj; // adjacency over picked edges, 1-based
    ChoiceFunction partial;

    ChoiceSearch(const ColoredMultigraph& m, int bound)
        : cm(m), g(bound), cand(candidates_by_color(m)), adj(m.s + 1) {}

    bool extend(std::size_t color) {
        if (color == cand.size()) return true;
        for (int idx : cand[color]) {
            int a = cm.edges[idx].a, b = cm.edges[idx].b;
            // Adding {a,b} closes a cycle of length d+1 for the current
            // shortest distance d; forbid any cycle of length <= g.
            int d = picked_distance(adj, a, b);
            if (d != -1 && d + 1 <= g) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
            partial.chosen.push_back(idx);
            if (extend(color + 1)) return true;
            partial.chosen.pop_back();
            adj[a].pop_back();
            adj[b].pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<ChoiceFunction> find_choice_no_short_cycles(const ColoredMultigraph& cm, int g) {
    ChoiceSearch search(cm, g);
    if (!search.extend(0)) return std::nullopt;
    return search.partial;
}

namespace {

// Hopcroft-Karp over colors (left) and distinct vertex pairs (right).
struct Matcher {
    int n_left, n_right;
    std::vector<std::vector<int>> adj; // left -> right options
    std::vector<int> match_l, match_r, dist;

    Matcher(int l, int r) : n_left(l), n_right(r), adj(l), match_l(l, -1), match_r(r, -1) {}

    bool bfs() {
        std::queue<int> q;
        dist.assign(n_left, -1);
        for (int u = 0; u < n_left; ++u)
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(u);
            }
        bool reachable = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) reachable = true;
                else if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    }

    int run() {
        int size = 0;
        while (bfs())
            for (int u = 0; u < n_left; ++u)
                if (match_l[u] == -1 && dfs(u)) ++size;
        return size;
    }
};

} // namespace

std::optional<ChoiceFunction> matching_choice_g2(const ColoredMultigraph& cm) {
    int n = color_count(cm);
    std::map<std::pair<int, int>, int> pair_id;
    // (color, pair) -> a representative edge index
    std::map<std::pair<int, int>, int> rep;
    for (int k = 0; k < static_cast<int>(cm.edges.size()); ++k) {
        const auto& e = cm.edges[k];
        pair_id.emplace(std::make_pair(e.a, e.b), static_cast<int>(pair_id.size()));
        rep.emplace(std::make_pair(e.color, pair_id[{e.a, e.b}]), k);
    }
    Matcher m(n, static_cast<int>(pair_id.size()));
    for (const auto& [key, edge_idx] : rep) {
        (void)edge_idx;
        m.adj[key.first - 1].push_back(key.second);
    }
    if (m.run() != n) return std::nullopt;
    ChoiceFunction c;
    for (int i = 1; i <= n; ++i) c.chosen.push_back(rep.at({i, m.match_l[i - 1]}));
    return c;
}

std::vector<Elem> reduce_and_retrieve(const StorageGraph& g, const ChoiceFunction& c,
                                      const Dataset& X, int phi, Rng& rng) {
    ColoredMultigraph cm = to_colored(g);
    StorageGraph pruned = pruned_graph(cm, c);
    const Field& f = X.field;
    auto [q, sec] = gen_queries(pruned, phi, f, rng);
    auto servers = disperse(g, X);
    std::vector<std::vector<Elem>> answers;
    for (int j = 1; j <= g.s; ++j)
        answers.push_back(answer(servers[j - 1], sparse_row(q, pruned, j), f));
    return reconstruct(answers, sec, f);
}

} // namespace gpir
