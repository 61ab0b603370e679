#pragma once

#include "mptkit/graph.hpp"

#include <string_view>

namespace mptkit::families {

// Triangle v2 v4 v6 with pendants v1, v3, v5 (0-based: triangle 1,3,5).
Graph net();
// 4-cycle 0-1-2-3 plus non-adjacent vertices 4, 5 joined to all of it.
Graph k222();
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complement_cycle(int n);
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
// Subdivided claw: center 0, legs 0-1-2, 0-3-4, 0-5-6.
Graph long_claw();
// Triangle 0,1,2 with 3~{0,1}, 4~{1,2}, 5~{0,2}.
Graph tent();
// Path 0..n-2 plus apex n-1 joined to all of it.
Graph fan(int n);

} // namespace mptkit::families

namespace mptkit {

// Named instance lookup. Accepts "net", "k222", "long-claw", "tent" and the
// parameterised forms "cycle:N", "path:N", "complete:N", "complement-cycle:N",
// "fan:N", "complete-bipartite:A,B". Unknown names raise InputError.
Graph family(std::string_view spec);

// family(name + ":" + n) for the single-parameter families; n is ignored by
// "net" and "k222".
Graph family(std::string_view name, int n);

} // namespace mptkit
