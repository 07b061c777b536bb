#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "lpa/errors.hpp"
#include "lpa/simples.hpp"

using namespace lpa;

namespace {
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Side Eb = Side::OverEbar;

// all vectors of F_p^n
std::vector<std::vector<Scalar>> all_vectors(const Field& f, std::size_t n) {
    std::vector<std::vector<Scalar>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& v : out)
            for (std::uint64_t c = 0; c < f.characteristic(); ++c) {
                auto w = v;
                w.push_back(Scalar::from_int(f, static_cast<long long>(c)));
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

// simple iff every nonzero homogeneous vector spins up everything (vertex idempotents + arrows)
bool brute_simple(const Rep& r) {
    const std::size_t n = r.total_dim();
    if (n == 0) return false;
    const Field& f = r.field();
    std::vector<Matrix> gens;
    for (ArrowIndex a = 0; a < r.maps().size(); ++a) {
        Matrix g(f, n, n);
        g.set_block(r.offset(r.map_target(a)), r.offset(r.map_source(a)), r.map(a));
        gens.push_back(g);
    }
    for (VertexIndex v = 0; v < r.dims().size(); ++v) {
        for (const auto& x : all_vectors(f, r.dim(v))) {
            bool nz = false;
            for (const auto& c : x) nz = nz || !c.is_zero();
            if (!nz) continue;
            std::vector<Scalar> full(n, Scalar::zero(f));
            for (std::size_t i = 0; i < x.size(); ++i) full[r.offset(v) + i] = x[i];
            SpanBuilder span(f, n);
            std::vector<std::vector<Scalar>> todo{full};
            span.add(full);
            while (!todo.empty()) {
                auto y = todo.back();
                todo.pop_back();
                for (const auto& g : gens) {
                    auto z = g.apply(y);
                    if (span.add(z)) todo.push_back(z);
                }
            }
            if (span.rank() < n) return false;
        }
    }
    return true;
}

// all reps with every dims vector of total in [1, dmax]
std::vector<Rep> all_reps(const QuiverPtr& q, const Field& f, std::size_t dmax) {
    std::vector<Rep> out;
    const std::size_t nv = q->num_vertices();
    std::vector<std::size_t> dims(nv, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
        if (v == nv) {
            if (left == dmax) return;
            const Rep z = Rep::zero_maps(q, Eb, f, dims);
            std::size_t entries = 0;
            for (const auto& m : z.maps()) entries += m.rows() * m.cols();
            for (const auto& x : all_vectors(f, entries)) {
                std::vector<Matrix> ms;
                std::size_t k = 0;
                for (const auto& m0 : z.maps()) {
                    Matrix m(f, m0.rows(), m0.cols());
                    for (std::size_t i = 0; i < m.rows(); ++i)
                        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = x[k++];
                    ms.push_back(m);
                }
                out.emplace_back(q, Eb, f, dims, ms);
            }
            return;
        }
        for (std::size_t d = 0; d <= left; ++d) {
            dims[v] = d;
            rec(v + 1, left - d);
        }
        dims[v] = 0;
    };
    rec(0, dmax);
    return out;
}

std::vector<Rep> brute_classes(const QuiverPtr& q, const Field& f, std::size_t dmax) {
    std::vector<Rep> classes;
    for (const auto& r : all_reps(q, f, dmax)) {
        if (!brute_simple(r)) continue;
        bool seen = false;
        for (const auto& c : classes) seen = seen || are_isomorphic(c, r);
        if (!seen) classes.push_back(r);
    }
    return classes;
}
}  // namespace

TEST_CASE("L1 over F2 up to dimension 2") {
    const auto s = enumerate_simples(fx::L1(), F2, 2);
    REQUIRE(s.size() == 3);
    CHECK(fx::same_factors(s, {fx::rep(fx::L1(), Eb, F2, {1}, {{"e", {{0}}}}),
                               fx::rep(fx::L1(), Eb, F2, {1}, {{"e", {{1}}}}),
                               fx::rep(fx::L1(), Eb, F2, {2}, {{"e", fx::companion({1, 1})}})}));
    CHECK(s[0].total_dim() == 1);
    CHECK(s[2].total_dim() == 2);
}

TEST_CASE("acyclic quivers give the vertex simples") {
    for (const auto& f : {F2, F3}) {
        const auto s = enumerate_simples(fx::A2(), f, 2);
        CHECK(s.size() == 2);
        for (const auto& r : s) CHECK(r.total_dim() == 1);
    }
    const auto a3 = make_quiver({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "a", "c"}});
    CHECK(enumerate_simples(a3, F2, 3).size() == 3);
}

TEST_CASE("edge cases") {
    CHECK(enumerate_simples(fx::L1(), F2, 0).empty());
    CHECK(cyclic_candidates(fx::L1(), F2, 0).empty());
    CHECK_THROWS_AS(enumerate_simples(fx::L1(), Field::rationals(), 1), InfiniteFieldUnsupported);
}

TEST_CASE("R2 over F2, dimension 1") {
    // every pair of scalars is simple in dimension 1
    CHECK(enumerate_simples(fx::R2(), F2, 1).size() == 4);
}

TEST_CASE("serial and parallel filters agree") {
    for (const auto& q : {fx::L1(), fx::R2(), fx::T()}) {
        const auto c = cyclic_candidates(q, F2, 3);
        CHECK(simple_filter_serial(c) == simple_filter_parallel(c));
        CHECK(enumerate_simples(q, F2, 3, true).size() == enumerate_simples(q, F2, 3, false).size());
    }
}

TEST_CASE("against exhaustive enumeration") {
    struct Case {
        QuiverPtr q;
        Field f;
        std::size_t d;
    };
    for (const auto& c : {Case{fx::L1(), F2, 3}, Case{fx::L1(), F3, 2}, Case{fx::R2(), F2, 2}, Case{fx::T(), F2, 2},
                          Case{fx::A2(), F2, 2}}) {
        const auto mine = enumerate_simples(c.q, c.f, c.d);
        const auto brute = brute_classes(c.q, c.f, c.d);
        CHECK(mine.size() == brute.size());
        CHECK(fx::same_factors(mine, brute));
    }
}
