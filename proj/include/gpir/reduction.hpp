#pragma once

#include <optional>
#include <vector>

#include "gpir/graphs.hpp"
#include "gpir/pir2.hpp"

namespace gpir {

// One kept edge per color: chosen[i-1] indexes ColoredMultigraph::edges and
// must carry color i.
struct ChoiceFunction {
    std::vector<int> chosen;
};

int color_count(const ColoredMultigraph& cm);

bool valid_choice(const ColoredMultigraph& cm, const ChoiceFunction& c);

// Uniform independent pick per color.
ChoiceFunction random_choice(const ColoredMultigraph& cm, Rng& rng);

// The 2-uniform multigraph keeping exactly the chosen edge of each color;
// edge i corresponds to color i.
StorageGraph pruned_graph(const ColoredMultigraph& cm, const ChoiceFunction& c);

// Exhaustive backtracking for a choice whose pruned graph has no cycle of
// length <= g (i.e. girth > g). nullopt = infeasible.
std::optional<ChoiceFunction> find_choice_no_short_cycles(const ColoredMultigraph& cm, int g);

// The g=2 case via maximum bipartite matching between colors and distinct
// vertex pairs; agrees with find_choice_no_short_cycles(cm, 2) on feasibility.
std::optional<ChoiceFunction> matching_choice_g2(const ColoredMultigraph& cm);

// Runs the 2-replication protocol on the pruned graph of to_colored(g);
// servers not chosen for a file receive no coefficient for it.
std::vector<Elem> reduce_and_retrieve(const StorageGraph& g, const ChoiceFunction& c,
                                      const Dataset& X, int phi, Rng& rng);

} // namespace gpir
