#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lpa/errors.hpp"
#include "lpa/integer_matrix.hpp"
#include "lpa/polynomial.hpp"

using namespace lpa;

TEST_CASE("field parsing and prime checks") {
    CHECK(Field::parse("q").is_rational());
    CHECK(Field::parse("fp:7").characteristic() == 7);
    CHECK_THROWS_AS(Field::parse("fp:9"), MalformedInput);
    CHECK_THROWS_AS(Field::parse("fp:1"), MalformedInput);
    CHECK_THROWS_AS(Field::parse("r"), MalformedInput);
}

TEST_CASE("scalar serialization") {
    const auto Q = Field::rationals();
    CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
    CHECK(Scalar::parse(Q, "-2/-4").to_string() == "1/2");
    CHECK(Scalar::parse(Q, "3").to_string() == "3");
    CHECK(Scalar::parse(Field::prime(5), "-1").to_string() == "4");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), MalformedInput);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), MalformedInput);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-50, 50);
    for (const auto& f : {Field::rationals(), Field::prime(2), Field::prime(7), Field::prime(4294967291ULL)}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = Scalar::from_int(f, d(rng)), b = Scalar::from_int(f, d(rng)), c = Scalar::from_int(f, d(rng));
            if (f.is_rational()) a = a / Scalar::from_int(f, 1 + (i % 7));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
    CHECK_THROWS_AS(Scalar::one(Field::prime(3)) + Scalar::one(Field::prime(5)), FieldMismatch);
}

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{0}}).d == IntMatrix{{0}});
    CHECK(smith_normal_form(IntMatrix{{-1}}).d == IntMatrix{{1}});
    const IntMatrix m{{2, 0}, {0, 3}};
    const auto s = smith_normal_form(m);
    CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-4, 4), sz(1, 4);
    for (int it = 0; it < 100; ++it) {
        const int r = sz(rng), c = sz(rng);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = d(rng);
        const auto s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(s.u.determinant()) == 1);
        CHECK(abs(s.v.determinant()) == 1);
        CHECK(s.d.is_diagonal());
        const std::size_t k = std::min<std::size_t>(r, c);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (s.d(i + 1, i + 1) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
            CHECK(s.d(i, i) >= 0);
        }
    }
    for (int it = 0; it < 100; ++it) {
        IntMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = d(rng);
        const auto ck = coker_ker(m);
        const mpz_class det = abs(m.determinant());
        if (det != 0) {
            CHECK(ck.coker.is_finite());
            CHECK(ck.coker.order() == det);
        } else {
            CHECK_FALSE(ck.coker.is_finite());
        }
    }
}

TEST_CASE("coker_ker examples") {
    auto r = coker_ker(IntMatrix{{-1}});
    CHECK(r.coker.is_trivial());
    CHECK(r.ker_rank == 0);
    r = coker_ker(IntMatrix{{0}});
    CHECK(r.coker.to_string() == "Z");
    CHECK(r.ker_rank == 1);
    r = coker_ker(IntMatrix{{0}, {-1}});
    CHECK(r.coker.to_string() == "Z");
    CHECK(r.ker_rank == 0);
}

TEST_CASE("unit cokernels") {
    auto u = unit_coker(IntMatrix{{0}}, Field::prime(5));
    CHECK(u.group.to_string() == "Z/4");
    u = unit_coker(IntMatrix{{-1}}, Field::prime(7));
    CHECK(u.group.is_trivial());
    u = unit_coker(IntMatrix{{0}}, Field::rationals());
    CHECK(u.structural);
    CHECK(u.two_torsion_part.to_string() == "Z/2");
    CHECK(u.per_prime_part.to_string() == "Z");
}

TEST_CASE("dense linear algebra") {
    const auto Q = Field::rationals();
    const Matrix a = fx::M(Q, {{1, 2}, {3, 4}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(Q, 2));
    CHECK(determinant(a) == fx::S(Q, -2));
    CHECK(rank(fx::M(Q, {{1, 2}, {2, 4}})) == 1);
    const Matrix ns = nullspace(fx::M(Q, {{1, 2}, {2, 4}}));
    CHECK(ns.cols() == 1);
    CHECK((fx::M(Q, {{1, 2}, {2, 4}}) * ns).is_zero());
    CHECK_FALSE(solve(fx::M(Q, {{1, 1}, {1, 1}}), {fx::S(Q, 1), fx::S(Q, 2)}));

    std::mt19937_64 rng(3);
    for (const auto& f : {Q, Field::prime(3)}) {
        for (int it = 0; it < 30; ++it) {
            const Matrix m = fx::random_matrix(rng, f, 4, 4);
            const auto cp = characteristic_polynomial(m);
            CHECK(cp.size() == 5);
            CHECK(cp.back().is_one());
            CHECK(evaluate_polynomial(cp, m).is_zero());
            Scalar d = cp[0];
            CHECK(d == determinant(m.scaled(fx::S(f, -1))));
        }
    }
}

TEST_CASE("span builder") {
    const auto Q = Field::rationals();
    SpanBuilder s(Q, 3);
    CHECK(s.add({fx::S(Q, 1), fx::S(Q, 1), fx::S(Q, 0)}));
    CHECK(s.add({fx::S(Q, 0), fx::S(Q, 1), fx::S(Q, 1)}));
    CHECK_FALSE(s.add({fx::S(Q, 1), fx::S(Q, 2), fx::S(Q, 1)}));
    CHECK(s.contains({fx::S(Q, 1), fx::S(Q, 0), fx::S(Q, -1)}));
    CHECK(s.rank() == 2);
}

namespace {
Poly P(const Field& f, std::vector<long long> c) {
    Poly p;
    for (auto x : c) p.push_back(Scalar::from_int(f, x));
    return p;
}
int total_degree(const std::vector<PolyFactor>& fs) {
    int d = 0;
    for (const auto& f : fs) d += poly_degree(f.poly) * f.multiplicity;
    return d;
}
}  // namespace

TEST_CASE("polynomial factorization") {
    const auto Q = Field::rationals();
    auto fs = factor_polynomial(P(Q, {-1, 0, 0, 0, 1}), Q);
    CHECK(fs.size() == 3);
    fs = factor_polynomial(P(Q, {4, 0, 0, 0, 1}), Q);
    CHECK(fs.size() == 2);
    fs = factor_polynomial(P(Q, {1, 0, 0, 0, 0, 0, 0, 0, 1}), Q);
    CHECK(fs.size() == 1);
    fs = factor_polynomial(P(Q, {0, 0, -1, 1}), Q);
    REQUIRE(fs.size() == 2);
    CHECK(total_degree(fs) == 3);
    const auto F2 = Field::prime(2);
    fs = factor_polynomial(P(F2, {1, 1, 1}), F2);
    CHECK(fs.size() == 1);
    fs = factor_polynomial(P(F2, {1, 0, 1}), F2);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].multiplicity == 2);

    // product of the factors reproduces the monic input
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-3, 3);
    for (const auto& f : {Q, Field::prime(2), Field::prime(5)}) {
        for (int it = 0; it < 40; ++it) {
            Poly p;
            for (int i = 0; i < 6; ++i) p.push_back(Scalar::from_int(f, d(rng)));
            p.push_back(Scalar::one(f));
            Poly prod{Scalar::one(f)};
            for (const auto& pf : factor_polynomial(p, f))
                for (int m = 0; m < pf.multiplicity; ++m) prod = poly_mul(prod, pf.poly);
            CHECK(prod == poly_monic(p));
        }
    }
}
