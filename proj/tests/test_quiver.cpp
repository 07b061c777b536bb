#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/errors.hpp"

using namespace lpa;

TEST_CASE("validation") {
    CHECK_NOTHROW(fx::L1());
    CHECK_NOTHROW(fx::R2());
    CHECK_THROWS_AS(make_quiver({"v1"}, {{"e", "v9", "v1"}}), MalformedQuiver);
    CHECK_THROWS_AS(make_quiver({"v1", "v1"}, {}), MalformedQuiver);
    CHECK_THROWS_AS(make_quiver({"v1"}, {{"e", "v1", "v1"}, {"e", "v1", "v1"}}), MalformedQuiver);
    CHECK_THROWS_AS(make_quiver({}, {}), MalformedQuiver);
}

TEST_CASE("sinks and sources") {
    CHECK(sinks(*fx::A2()) == std::vector<VertexIndex>{1});
    CHECK(sinks(*fx::L1()).empty());
    CHECK(sinks(*fx::T()) == std::vector<VertexIndex>{1});
    CHECK(sources(*fx::A2()) == std::vector<VertexIndex>{0});
}

TEST_CASE("adjacency and incidence") {
    CHECK(adjacency(*fx::R2()) == IntMatrix{{2}});
    CHECK(adjacency(*fx::T()) == IntMatrix{{1, 1}, {0, 0}});
    CHECK(adjacency(*fx::A2()) == IntMatrix{{0, 1}, {0, 0}});
    auto inc = incidence(*fx::L1());
    CHECK(inc.n_e == IntMatrix{{1}});
    CHECK(inc.one == IntMatrix{{1}});
    inc = incidence(*fx::T());
    CHECK(inc.n_e == IntMatrix{{1}, {1}});
    CHECK(inc.one == IntMatrix{{1}, {0}});
    inc = incidence(*fx::A2());
    CHECK(inc.n_e == IntMatrix{{0}, {1}});
}

TEST_CASE("inverse quiver") {
    const auto a2 = inverse_quiver(*fx::A2());
    CHECK(a2.arrow(0).src == 1);
    CHECK(a2.arrow(0).dst == 0);
    CHECK(a2.arrow(0).name == bar_name("a"));
    CHECK(inverse_quiver(*fx::L1()).num_arrows() == 1);
    CHECK(adjacency(inverse_quiver(inverse_quiver(*fx::T()))) == adjacency(*fx::T()));
}

TEST_CASE("forward acyclicity and path counts") {
    CHECK_FALSE(is_forward_acyclic(*fx::T(), 0));
    CHECK_FALSE(count_paths_from(*fx::T(), 0));
    CHECK(is_forward_acyclic(*fx::T(), 1));
    CHECK(*count_paths_from(*fx::T(), 1) == 1);
    CHECK(is_forward_acyclic(*fx::A2(), 0));
    CHECK(*count_paths_from(*fx::A2(), 0) == 2);
}

TEST_CASE("path enumeration") {
    const auto l1 = fx::L1();
    auto ps = paths_up_to(*l1, 2);
    REQUIRE(ps.size() == 3);
    CHECK(path_to_string(*l1, ps[0]) == "p_v1");
    CHECK(path_to_string(*l1, ps[1]) == "e");
    CHECK(path_to_string(*l1, ps[2]) == "e.e");
    const auto r2 = fx::R2();
    ps = paths_up_to(*r2, 1);
    REQUIRE(ps.size() == 3);
    CHECK(path_to_string(*r2, ps[1]) == "x");
    CHECK(path_to_string(*r2, ps[2]) == "y");
    CHECK(paths_up_to(*fx::A2(), 2).size() == 3);
}

TEST_CASE("random quiver invariants") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 200; ++it) {
        const auto q = fx::random_quiver(rng, 1 + it % 6, 6);
        const auto inc = incidence(*q);
        CHECK(inc.n_e.cols() == q->num_vertices() - sinks(*q).size());
        CHECK(inc.n_e.rows() == q->num_vertices());
        CHECK(sinks(inverse_quiver(*q)) == sources(*q));
        // cycle detection vs enumeration with a cutoff beyond any simple path
        const std::size_t cutoff = q->num_vertices() * (q->num_arrows() + 1) + 1;
        for (VertexIndex v = 0; v < q->num_vertices(); ++v) {
            std::size_t long_paths = 0;
            for (const auto& p : paths_of_length(*q, q->num_vertices()))
                if (p.source == v) ++long_paths;
            const bool acyclic = is_forward_acyclic(*q, v);
            CHECK(acyclic == (long_paths == 0));
            CHECK(acyclic == count_paths_from(*q, v).has_value());
            if (acyclic) {
                std::size_t n = 0;
                for (const auto& p : paths_up_to(*q, std::min<std::size_t>(cutoff, q->num_vertices())))
                    if (p.source == v) ++n;
                CHECK(*count_paths_from(*q, v) == n);
            }
        }
    }
}
