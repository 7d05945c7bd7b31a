#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "graphck/canonical.hpp"
#include "graphck/corpus.hpp"
#include "graphck/errors.hpp"
#include "graphck/ideals.hpp"
#include "graphck/ktheory.hpp"

using namespace graphck;
using namespace fixtures;

namespace {

bool has_condition(const StablyCompleteReport& r, int c) {
    for (const auto& v : r.violations) {
        if (v.condition == c) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("stably complete examples") {
    CHECK(is_stably_complete(G1()).satisfied);
    CHECK(is_stably_complete(G2()).satisfied);
    CHECK(is_stably_complete(G6()).satisfied);
    CHECK(is_stably_complete(G5()).satisfied);

    auto g3 = is_stably_complete(G3());
    CHECK_FALSE(g3.satisfied);
    CHECK(has_condition(g3, 2));

    // Two simple cycles through a but a single loop.
    Graph two({"a", "b"}, std::vector<std::vector<ExtNat>>{{1, 1}, {1, 1}});
    CHECK(has_condition(is_stably_complete(two), 3));

    // v reaches x only through w.
    Graph far({"v", "w", "x"}, std::vector<std::vector<ExtNat>>{{0, kInf, 0}, {0, 2, 1}, {0, 0, 2}});
    auto r = is_stably_complete(far);
    CHECK(has_condition(r, 4));
    CHECK(has_condition(r, 5));

    // A looped emitter without a regular companion.
    Graph lonely({"v", "w"}, std::vector<std::vector<ExtNat>>{{kInf, kInf}, {0, 2}});
    CHECK(has_condition(is_stably_complete(lonely), 6));
}

TEST_CASE("canonicalize examples") {
    auto g1 = canonicalize(G1());
    CHECK(g1.graph == G1());
    CHECK(g1.trace.empty());

    Graph ab({"a", "b"}, std::vector<std::vector<ExtNat>>{{0, 1}, {0, 2}});
    auto r = canonicalize(ab);
    CHECK(r.graph == Graph({"b"}, std::vector<std::vector<ExtNat>>{{2}}));

    Graph u({"u", "w", "z"}, std::vector<std::vector<ExtNat>>{{0, kInf, 2}, {0, 2, 0}, {0, 0, 2}});
    auto c = canonicalize(u);
    CHECK(is_stably_complete(c.graph).satisfied);
    REQUIRE_FALSE(c.trace.empty());
    CHECK(c.trace.front().kind == MoveKind::BREAKSPLIT);
    CHECK(k_groups(c.graph) == k_groups(u));
}

TEST_CASE("canonicalize on a random corpus") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 6);
        auto r = canonicalize(g);
        CHECK(is_stably_complete(r.graph).satisfied);
        CHECK(k_groups(r.graph) == k_groups(g));
        Graph cur = g;
        for (const auto& rec : r.trace) {
            cur = replay(rec, cur);
        }
        CHECK(cur == r.graph);

        auto again = canonicalize(r.graph);
        CHECK(are_isomorphic(again.graph, r.graph));

        const Graph& h = r.graph;
        if (h.size() <= 5) {
            for (unsigned mask = 0; mask < (1U << h.size()); ++mask) {
                VertexSet s(h.size());
                for (std::size_t k = 0; k < h.size(); ++k) {
                    s[k] = ((mask >> k) & 1U) != 0;
                }
                CHECK(is_saturated(h, s));
                if (is_hereditary(h, s)) {
                    CHECK(members(h, breaking_vertices(h, s)).empty());
                }
            }
        }
    }
}

TEST_CASE("canonicalize honours a fuel bound") {
    Graph g({"v", "x", "y"}, std::vector<std::vector<ExtNat>>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(is_stably_complete(canonicalize(g, CanonicalizeOptions{std::size_t{1}}).graph).satisfied);
    CHECK_THROWS_AS(canonicalize(g, CanonicalizeOptions{std::size_t{0}}), InternalError);
}
