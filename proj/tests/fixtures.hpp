#pragma once

#include "graphck/graph.hpp"

namespace fixtures {

using graphck::ExtNat;
using graphck::Graph;
using graphck::kInf;

// One vertex, two loops.
inline Graph G1() { return Graph({"a"}, std::vector<std::vector<ExtNat>>{{2}}); }
// One vertex, one loop.
inline Graph G2() { return Graph({"a"}, std::vector<std::vector<ExtNat>>{{1}}); }
// a -> b.
inline Graph G3() { return Graph({"a", "b"}, std::vector<std::vector<ExtNat>>{{0, 1}, {0, 0}}); }
// v emits infinitely to w; w has one loop.
inline Graph G5() { return Graph({"v", "w"}, std::vector<std::vector<ExtNat>>{{0, kInf}, {0, 1}}); }
inline Graph G6() { return Graph({"v", "w"}, std::vector<std::vector<ExtNat>>{{kInf, kInf}, {1, 2}}); }
inline Graph G7() {
    return Graph({"w", "v", "x"}, std::vector<std::vector<ExtNat>>{{1, 1, 1}, {0, 0, kInf}, {0, 0, 1}});
}
inline Graph G8() {
    return Graph({"u", "v", "x"}, std::vector<std::vector<ExtNat>>{{0, kInf, kInf}, {0, 0, kInf}, {0, 0, 0}});
}

} // namespace fixtures
