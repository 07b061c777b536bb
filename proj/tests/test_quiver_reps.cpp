#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/errors.hpp"

using namespace lpa;
using fx::rep;

namespace {
const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Side Eb = Side::OverEbar;
}  // namespace

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(fx::rep(fx::A2(), Eb, Q, {1, 1}, {{"a", {{1, 2}}}}), ShapeMismatch);
    CHECK_THROWS_AS(fx::rep(fx::A2(), Eb, Q, {1}), ShapeMismatch);
}

TEST_CASE("action") {
    const auto l1 = fx::L1();
    const Rep r = rep(l1, Eb, Q, {1}, {{"e", {{2}}}});
    const auto fq = r.algebra_quiver();
    const auto ebar2 = fx::elem(fq, Q, {{1, {"e~", "e~"}}});
    CHECK(act(r, ebar2, {fx::S(Q, 1)})[0] == fx::S(Q, 4));

    const auto t = fx::T();
    std::mt19937_64 rng(2);
    const Rep rt = fx::random_rep(rng, t, Eb, Q, {2, 2}, -3, 3);
    const auto tq = rt.algebra_quiver();
    const auto p1 = AlgebraElement::vertex(tq, Q, 0);
    auto v = GradedVector{fx::S(Q, 1), fx::S(Q, 2), fx::S(Q, 3), fx::S(Q, 4)};
    auto pv = act(rt, p1, v);
    CHECK(pv == GradedVector{fx::S(Q, 1), fx::S(Q, 2), fx::S(Q, 0), fx::S(Q, 0)});
    const auto fe = fx::elem(tq, Q, {{1, {"f~", "e~"}}});
    const auto f = fx::elem(tq, Q, {{1, {"f~"}}}), e = fx::elem(tq, Q, {{1, {"e~"}}});
    for (int it = 0; it < 50; ++it) {
        GradedVector w;
        std::uniform_int_distribution<int> d(-5, 5);
        for (int i = 0; i < 4; ++i) w.push_back(fx::S(Q, d(rng)));
        CHECK(act(rt, fe, w) == act(rt, f, act(rt, e, w)));
    }
    CHECK_THROWS_AS(act(rt, AlgebraElement::arrow(t, Q, 0), v), QuiverMismatch);
}

TEST_CASE("submodules and quotients") {
    const auto l1 = fx::L1();
    const Rep r = rep(l1, Eb, Q, {2}, {{"e", {{0, 1}, {0, 0}}}});
    CHECK(submodule_generated(r, {fx::unit(Q, 2, 1)}).sub.total_dim() == 2);
    auto s = submodule_generated(r, {fx::unit(Q, 2, 0)});
    CHECK(s.sub.total_dim() == 1);
    CHECK(s.sub.map(0).is_zero());
    CHECK(quotient(r, s).total_dim() == 1);
    CHECK(submodule_generated(r, {GradedVector(2, fx::S(Q, 0))}).sub.total_dim() == 0);
}

TEST_CASE("composition series examples") {
    const auto l1 = fx::L1();
    auto cs = composition_series(rep(l1, Eb, Q, {2}, {{"e", {{0, 1}, {0, 0}}}}));
    REQUIRE(cs.length() == 2);
    CHECK(is_coker_nu(cs.factors[0]));
    CHECK(is_coker_nu(cs.factors[1]));
    cs = composition_series(rep(l1, Eb, Q, {2}, {{"e", {{1, 0}, {0, 0}}}}));
    REQUIRE(cs.length() == 2);
    CHECK(fx::same_factors(cs.factors, {rep(l1, Eb, Q, {1}, {{"e", {{1}}}}), rep(l1, Eb, Q, {1}, {{"e", {{0}}}})}));
    CHECK(composition_series(rep(l1, Eb, Q, {0})).length() == 0);
}

TEST_CASE("simplicity and isomorphism") {
    const auto l1 = fx::L1();
    CHECK(is_simple(coker_nu(fx::A2(), Q, 0)));
    CHECK(is_simple(rep(l1, Eb, F2, {2}, {{"e", fx::companion({1, 1})}})));
    CHECK_FALSE(is_simple(rep(l1, Eb, Q, {2}, {{"e", fx::companion({-1, 0})}})));  // x^2 - 1
    CHECK(is_simple(rep(l1, Eb, Q, {2}, {{"e", fx::companion({-2, 0})}})));        // x^2 - 2
    CHECK_FALSE(is_simple(rep(l1, Eb, Q, {0})));
    const Rep j = rep(l1, Eb, Q, {2}, {{"e", {{1, 1}, {0, 1}}}});
    const Rep d = rep(l1, Eb, Q, {2}, {{"e", {{1, 0}, {0, 1}}}});
    CHECK_FALSE(are_isomorphic(j, d));
    CHECK(are_isomorphic(j, j));
    CHECK(are_isomorphic(j, rep(l1, Eb, Q, {2}, {{"e", {{1, 0}, {1, 1}}}})));
    // cycle through two vertices: simple of dimension (1,1)
    const auto c2 = make_quiver({"a", "b"}, {{"u", "a", "b"}, {"w", "b", "a"}});
    CHECK(is_simple(rep(c2, Eb, Q, {1, 1}, {{"u", {{1}}}, {"w", {{1}}}})));
    CHECK_FALSE(is_simple(rep(c2, Eb, Q, {1, 1}, {{"u", {{1}}}, {"w", {{0}}}})));
}

TEST_CASE("coker nu") {
    const auto a2 = fx::A2();
    const Rep c = coker_nu(a2, Q, 0);
    CHECK(c.dims() == std::vector<std::size_t>{1, 0});
    CHECK_THROWS_AS(coker_nu(a2, Q, 1), SinkVertex);
    const auto l1 = fx::L1();
    CHECK(is_coker_nu(rep(l1, Eb, Q, {1}, {{"e", {{0}}}})) == VertexIndex{0});
    CHECK_FALSE(is_coker_nu(rep(l1, Eb, Q, {1}, {{"e", {{1}}}})));
}

TEST_CASE("killed modules and induced length") {
    const auto l1 = fx::L1();
    CHECK(is_killed(rep(l1, Eb, Q, {3}, {{"e", {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}}})));
    CHECK_FALSE(is_killed(rep(l1, Eb, Q, {1}, {{"e", {{1}}}})));
    CHECK_FALSE(is_killed(rep(fx::A2(), Eb, Q, {0, 1})));
    // x^2 (x - 1) = x^3 - x^2
    CHECK(induced_length(rep(l1, Eb, Q, {3}, {{"e", fx::companion({0, 0, -1})}})) == 1);
    CHECK(induced_length(rep(l1, Eb, F2, {2}, {{"e", fx::companion({1, 1})}})) == 1);
    CHECK_THROWS_AS(induced_length(rep(l1, Side::OverE, Q, {1})), TypeMismatch);
}

TEST_CASE("endomorphism field degree") {
    CHECK(endomorphism_field_degree(coker_nu(fx::A2(), F2, 0)) == 1);
    const auto l1 = fx::L1();
    CHECK(endomorphism_field_degree(rep(l1, Eb, F2, {2}, {{"e", fx::companion({1, 1})}})) == 2);
    CHECK(endomorphism_field_degree(rep(l1, Eb, Field::prime(3), {1}, {{"e", {{2}}}})) == 1);
    CHECK_THROWS_AS(endomorphism_field_degree(rep(l1, Eb, F2, {2}, {{"e", {{0, 1}, {0, 0}}}})), NotSimple);
}

TEST_CASE("standard resolution and euler characteristic") {
    const auto l1 = fx::L1();
    const Rep m = rep(l1, Side::OverE, Q, {1}, {{"e", {{1}}}});
    const auto sigma = standard_resolution(m);
    REQUIRE(sigma.rows() == 1);
    REQUIRE(sigma.cols() == 1);
    CHECK(sigma.at(0, 0) == fx::elem(l1, Q, {{1, {"e"}}, {-1, {}}}));
    CHECK(sigma_membership(sigma).member);

    const auto a2 = fx::A2();
    const Rep s1 = rep(a2, Side::OverE, Q, {1, 0});
    const auto r1 = standard_resolution(s1);
    CHECK(r1.rows() == 0);
    CHECK(r1.cols() == 1);
    CHECK(euler_characteristic(s1) == std::vector<long>{1, 0});
    CHECK(euler_characteristic(coker_nu(a2, Q, 0)) == std::vector<long>{1, -1});
    CHECK(standard_resolution(rep(l1, Side::OverE, Q, {0})).cols() == 0);

    std::mt19937_64 rng(12);
    const auto r2 = fx::R2();
    for (std::size_t d = 0; d < 5; ++d)
        CHECK(euler_characteristic(fx::random_rep(rng, r2, Side::OverE, Q, {d})) == std::vector<long>{-long(d)});
}

TEST_CASE("resolution is a presentation") {
    std::mt19937_64 rng(31);
    for (const auto& q : {fx::T(), fx::L1(), fx::A2(), fx::R2()}) {
        for (auto side : {Side::OverE, Eb}) {
            for (int it = 0; it < 10; ++it) {
                std::vector<std::size_t> dims;
                for (std::size_t v = 0; v < q->num_vertices(); ++v) dims.push_back(rng() % 3);
                const Rep r = fx::random_rep(rng, q, side, Q, dims, -2, 2);
                const auto s = standard_resolution(r);
                CHECK(resolution_class(s) == euler_characteristic(r));
                for (std::size_t i = 0; i < s.rows(); ++i) {
                    GradedVector acc(r.total_dim(), fx::S(Q, 0));
                    for (std::size_t c = 0; c < s.cols(); ++c) {
                        const auto img = act(r, s.at(i, c), fx::unit(Q, r.total_dim(), c));
                        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += img[k];
                    }
                    CHECK(std::all_of(acc.begin(), acc.end(), [](const Scalar& x) { return x.is_zero(); }));
                }
            }
        }
    }
}

TEST_CASE("Jordan-Holder and additivity") {
    std::mt19937_64 rng(77);
    for (const auto& f : {Q, F2, Field::prime(3)}) {
        for (const auto& q : {fx::L1(), fx::T()}) {
            for (int it = 0; it < 12; ++it) {
                std::vector<std::size_t> dims;
                std::size_t total = 0;
                for (std::size_t v = 0; v < q->num_vertices(); ++v) {
                    dims.push_back(rng() % (q->num_vertices() == 1 ? 6 : 3));
                    total += dims.back();
                }
                if (total > 5) continue;
                const Rep r = fx::random_rep(rng, q, Eb, f, dims, 0, 1);
                const auto a = composition_series(r, 0), b = composition_series(r, 7);
                CHECK(fx::same_factors(a.factors, b.factors));
                std::size_t sum = 0;
                for (const auto& s : a.factors) sum += s.total_dim();
                CHECK(sum == r.total_dim());
                for (const auto& s : a.factors) CHECK(is_simple(s));
                CHECK(is_killed(r) == (induced_length(r) == 0));
                if (r.total_dim() == 0) continue;
                const auto sub = submodule_generated(r, {fx::unit(f, r.total_dim(), rng() % r.total_dim())});
                CHECK(induced_length(r) == induced_length(sub.sub) + induced_length(quotient(r, sub)));
            }
        }
    }
}
