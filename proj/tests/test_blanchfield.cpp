#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/blanchfield.hpp"
#include "lpa/errors.hpp"

using namespace lpa;
using fx::rep;

namespace {
const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Side E = Side::OverE, Eb = Side::OverEbar;

QuiverPtr C2() { return make_quiver({"v1", "v2"}, {{"a", "v1", "v2"}, {"b", "v2", "v1"}}); }

AlgebraMatrix one_by_one(const QuiverPtr& q, const Field& f, const AlgebraElement& x) {
    AlgebraMatrix m(q, f, {0}, {0});
    m.set(0, 0, x);
    return m;
}

std::vector<Rep> flat_factors(const std::vector<FactorCount>& fs) {
    std::vector<Rep> out;
    for (const auto& fc : fs)
        for (std::size_t i = 0; i < fc.multiplicity; ++i) out.push_back(fc.simple);
    return out;
}
}  // namespace

TEST_CASE("is_blanchfield_rep") {
    CHECK(is_blanchfield_rep(rep(fx::L1(), E, Q, {1}, {{"e", {{1}}}})));
    CHECK_FALSE(is_blanchfield_rep(rep(fx::L1(), E, Q, {1}, {{"e", {{0}}}})));
    CHECK_FALSE(is_blanchfield_rep(rep(fx::A2(), E, Q, {0, 1})));
    CHECK(is_blanchfield_rep(rep(fx::A2(), E, Q, {0, 0})));
    CHECK_FALSE(is_blanchfield_rep(rep(fx::R2(), E, Q, {1}, {{"x", {{1}}}, {"y", {{1}}}})));
    CHECK_THROWS_AS(is_blanchfield_rep(rep(fx::L1(), Eb, Q, {1})), TypeMismatch);
}

TEST_CASE("is_blanchfield_induced") {
    CHECK(is_blanchfield_induced(rep(fx::T(), Eb, Q, {1, 0}, {{"e", {{1}}}})));
    CHECK_FALSE(is_blanchfield_induced(rep(fx::T(), Eb, Q, {1, 1})));
    CHECK(is_blanchfield_induced(rep(fx::L1(), Eb, Q, {3})));
    CHECK(is_blanchfield_induced(rep(fx::R2(), Eb, Q, {2})));
}

TEST_CASE("blanchfield_dual") {
    const Rep m = rep(fx::L1(), E, Q, {2}, {{"e", {{2, 1}, {0, 1}}}});
    const Rep d = blanchfield_dual(m);
    CHECK(d.side() == Eb);
    CHECK(d.map(0) * m.map(0) == Matrix::identity(Q, 2));
    CHECK_THROWS_AS(blanchfield_dual(rep(fx::L1(), E, Q, {1}, {{"e", {{0}}}})), NotBlanchfield);
}

TEST_CASE("sigma_to_lattice examples") {
    const auto l1 = fx::L1();
    auto r = sigma_to_lattice(one_by_one(l1, Q, fx::elem(l1, Q, {{1, {}}, {-1, {"e"}}})));
    CHECK(r.lattice.total_dim() == 1);
    CHECK(r.lattice.map(0) == fx::M(Q, {{1}}));
    CHECK(r.length == 1);
    CHECK(r.blanchfield);

    const auto r2 = fx::R2();
    r = sigma_to_lattice(one_by_one(r2, Q, fx::elem(r2, Q, {{1, {}}, {-1, {"x"}}, {-1, {"y"}}})));
    CHECK(r.lattice.total_dim() == 1);
    CHECK(r.lattice.map(0) == fx::M(Q, {{1}}));
    CHECK(r.lattice.map(1) == fx::M(Q, {{1}}));
    CHECK(r.length == 1);
    CHECK(r.blanchfield);

    r = sigma_to_lattice(one_by_one(l1, Q, fx::elem(l1, Q, {{1, {}}, {-1, {"e", "e"}}})));
    CHECK(r.lattice.total_dim() == 2);
    CHECK(r.length == 2);
    CHECK(r.generator_images.size() == 1);

    CHECK_THROWS_AS(sigma_to_lattice(one_by_one(l1, Q, fx::elem(l1, Q, {{1, {"e"}}}))), NotSigma);
}

TEST_CASE("sigma_to_lattice on random loop presentations") {
    // coker(1 - t(e)) = k[e]/(1 - t(e)); ebar is e^{-1} there, so t(ebar^{-1}) = 1
    std::mt19937_64 rng(7);
    const auto l1 = fx::L1();
    for (const auto& f : {Q, F5}) {
        for (int it = 0; it < 15; ++it) {
            std::uniform_int_distribution<int> deg(1, 4), c(-3, 3);
            const int d = deg(rng);
            std::vector<long long> t(d + 1, 0);
            for (int i = 1; i <= d; ++i) t[i] = c(rng);
            if (Scalar::from_int(f, t[d]).is_zero()) t[d] = 1;
            std::vector<std::pair<long long, std::vector<std::string>>> terms{{1, {}}};
            for (int i = 1; i <= d; ++i) terms.push_back({-t[i], std::vector<std::string>(i, "e")});
            const auto rep = sigma_to_lattice(one_by_one(l1, f, fx::elem(l1, f, terms)));
            REQUIRE(rep.lattice.total_dim() == static_cast<std::size_t>(d));
            const auto inv = inverse(rep.lattice.map(0));
            REQUIRE(inv);
            Matrix acc(f, d, d), pw = Matrix::identity(f, d);
            for (int i = 1; i <= d; ++i) {
                pw = pw * *inv;
                acc = acc + pw.scaled(Scalar::from_int(f, t[i]));
            }
            CHECK(acc == Matrix::identity(f, d));
            CHECK(rep.blanchfield);
            CHECK(rep.length == induced_length(rep.lattice));
        }
    }
}

TEST_CASE("round trip through the standard resolution") {
    std::mt19937_64 rng(11);
    struct Case {
        QuiverPtr q;
        std::vector<std::size_t> dims;
    };
    const std::vector<Case> cases{{fx::L1(), {1}}, {fx::L1(), {2}}, {fx::L1(), {3}}, {fx::T(), {2, 0}},
                                  {fx::T(), {3, 0}}, {C2(), {1, 1}}, {C2(), {2, 2}}};
    int tested = 0;
    for (const auto& f : {Q, F2, F5})
        for (const auto& c : cases)
            for (int it = 0; it < 4; ++it) {
                const Rep m = fx::random_rep(rng, c.q, E, f, c.dims);
                if (!is_blanchfield_rep(m)) continue;
                ++tested;
                const auto sigma = standard_resolution(m);
                REQUIRE(sigma.rows() == sigma.cols());
                REQUIRE(sigma_membership(sigma).member);
                const auto r = sigma_to_lattice(sigma);
                CHECK(r.blanchfield);
                CHECK(fx::same_factors(flat_factors(r.factors), flat_factors(induced_factors(blanchfield_dual(m)))));
            }
    CHECK(tested > 20);
}

TEST_CASE("lattice_core") {
    const auto l1 = fx::L1();
    const Rep a = rep(l1, Eb, Q, {2}, {{"e", {{1, 0}, {0, 0}}}});
    const Rep c = lattice_core(a);
    CHECK(c.total_dim() == 1);
    CHECK(c.map(0) == fx::M(Q, {{1}}));
    CHECK(lattice_core(c).total_dim() == 1);

    const Rep inv = rep(l1, Eb, Q, {2}, {{"e", {{1, 1}, {0, 1}}}});
    CHECK(lattice_core(inv).total_dim() == 2);
    CHECK(lattice_core(rep(l1, Eb, Q, {3}, {{"e", {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}}})).total_dim() == 0);
    CHECK_THROWS_AS(lattice_core(rep(fx::T(), Eb, Q, {1, 1})), NotBlanchfield);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        const Rep x = fx::random_rep(rng, C2(), Eb, F5, {2, 2});
        const Rep k = lattice_core(x);
        CHECK(lattice_core(k).total_dim() == k.total_dim());
        CHECK(k.total_dim() <= x.total_dim());
        CHECK(fx::same_factors(flat_factors(induced_factors(k)), flat_factors(induced_factors(x))));
    }
}
