#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpir/linalg.hpp"

namespace gpir {

// Hypergraph of servers (vertices, 1-based) and files (hyperedges, 1-based).
// Parallel edges are allowed; `shared_pair` records that some two servers
// store more than one common file.
struct StorageGraph {
    int s = 0;
    std::vector<std::vector<int>> edges; // each sorted ascending, distinct vertices
    bool shared_pair = false;

    int n() const { return static_cast<int>(edges.size()); }
};

struct ColoredEdge {
    int a = 0; // a < b, 1-based vertices
    int b = 0;
    int color = 0; // 1-based hyperedge index
};

// Multigraph obtained by replacing each hyperedge with a clique of its color.
struct ColoredMultigraph {
    int s = 0;
    std::vector<ColoredEdge> edges;
};

// Simple cycle: edge k joins vertices[k] and vertices[(k+1) mod t].
struct Cycle {
    std::vector<int> vertices; // distinct, 1-based
    std::vector<int> edge_ids; // 1-based, distinct
    int length() const { return static_cast<int>(edge_ids.size()); }
};

StorageGraph from_edge_list(int s, std::vector<std::vector<int>> edges);

StorageGraph petersen();
StorageGraph complete_bipartite(int a, int b);
StorageGraph cycle_graph(int c); // c >= 3
StorageGraph path_graph(int c);  // c >= 2 vertices, c-1 edges
StorageGraph bowtie();           // two triangles sharing vertex 3

// Parse "petersen", "bowtie", "cycle(5)", "path(4)", "complete_bipartite(3,3)".
StorageGraph family(const std::string& name);

Mat incidence(const StorageGraph& g);

bool is_two_uniform(const StorageGraph& g);
int degree(const StorageGraph& g, int v);
int min_degree(const StorageGraph& g);
// d if every vertex has degree d, otherwise nullopt.
std::optional<int> regular_degree(const StorageGraph& g);

struct Induced {
    StorageGraph graph;          // vertices renumbered 1..|S|
    std::vector<int> vertex_ids; // new vertex k -> original vertex vertex_ids[k-1]
    std::vector<int> edge_ids;   // new edge j -> original edge edge_ids[j-1]
};
Induced induced(const StorageGraph& g, const std::vector<int>& S);

// All simple cycles of length <= max_len, each reported once (deduplicated by
// edge set). Requires a 2-uniform graph; 2-cycles arise from parallel edges.
std::vector<Cycle> cycles(const StorageGraph& g, int max_len);
std::vector<Cycle> cycles(const StorageGraph& g); // max_len = s

// Length of the shortest cycle, or nullopt if acyclic. Computed by per-edge
// BFS, independently of cycles().
std::optional<int> girth(const StorageGraph& g);

bool is_acyclic(const StorageGraph& g); // union-find, no enumeration

ColoredMultigraph to_colored(const StorageGraph& g);

// Forget colors; edge j of the result corresponds to cm.edges[j-1].
StorageGraph underlying(const ColoredMultigraph& cm);

// True iff the colored multigraph induced on S has a cycle whose edges carry
// at least two distinct colors. Parallel edges of distinct colors count.
bool polychromatic_cycle_exists(const ColoredMultigraph& cm, const std::vector<int>& S);

// Text format: first line "s n", then n lines of 1-based vertex indices,
// '#' starts a comment.
StorageGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const StorageGraph& g);
StorageGraph load_graph_file(const std::string& path);

} // namespace gpir
