#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/path_algebra.hpp"
#include "lpa/quiver.hpp"
#include "lpa/quiver_reps.hpp"
#include <map>

namespace fx {

inline lpa::QuiverPtr L1() { return lpa::make_quiver({"v1"}, {{"e", "v1", "v1"}}); }
inline lpa::QuiverPtr R2() { return lpa::make_quiver({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}}); }
inline lpa::QuiverPtr R3() {
    return lpa::make_quiver({"v"}, {{"x", "v", "v"}, {"y", "v", "v"}, {"z", "v", "v"}});
}
inline lpa::QuiverPtr rose(int n) {
    std::vector<lpa::Quiver::ArrowSpec> a;
    for (int i = 0; i < n; ++i) a.push_back({"x" + std::to_string(i), "v", "v"});
    return lpa::make_quiver({"v"}, a);
}
inline lpa::QuiverPtr A2() { return lpa::make_quiver({"v1", "v2"}, {{"a", "v1", "v2"}}); }
inline lpa::QuiverPtr T() { return lpa::make_quiver({"v1", "v2"}, {{"e", "v1", "v1"}, {"f", "v1", "v2"}}); }

/// Random quiver with d vertices and up to `arrows` arrows.
inline lpa::QuiverPtr random_quiver(std::mt19937_64& rng, int d, int arrows) {
    std::vector<std::string> v;
    for (int i = 0; i < d; ++i) v.push_back("v" + std::to_string(i + 1));
    std::uniform_int_distribution<int> pick(0, d - 1), cnt(0, arrows);
    std::vector<lpa::Quiver::ArrowSpec> a;
    const int m = cnt(rng);
    for (int i = 0; i < m; ++i) a.push_back({"a" + std::to_string(i), v[pick(rng)], v[pick(rng)]});
    return lpa::make_quiver(v, a);
}

inline lpa::Scalar S(const lpa::Field& f, long long n) { return lpa::Scalar::from_int(f, n); }

inline lpa::Matrix M(const lpa::Field& f, std::vector<std::vector<long long>> rows) {
    return lpa::Matrix::from_ints(f, rows);
}

inline lpa::Matrix random_matrix(std::mt19937_64& rng, const lpa::Field& f, std::size_t r, std::size_t c,
                                 int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> d(lo, hi);
    lpa::Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = lpa::Scalar::from_int(f, d(rng));
    return m;
}

/// Path from arrow names.
inline lpa::Path path(const lpa::Quiver& q, const std::vector<std::string>& names, const std::string& base = "") {
    if (names.empty()) return lpa::Path::trivial(q.vertex_index(base.empty() ? q.vertex_name(0) : base));
    lpa::Path p;
    p.source = q.arrow(q.arrow_index(names.front())).src;
    for (const auto& n : names) p.arrows.push_back(q.arrow_index(n));
    p.range = q.arrow(p.arrows.back()).dst;
    return p;
}

/// Element from (coefficient, arrow word) pairs; empty word means p at `base`.
inline lpa::AlgebraElement elem(const lpa::QuiverPtr& q, const lpa::Field& f,
                                const std::vector<std::pair<long long, std::vector<std::string>>>& terms,
                                const std::string& base = "") {
    lpa::AlgebraElement x(q, f);
    for (const auto& [c, w] : terms) x.add_term(path(*q, w, base), S(f, c));
    return x;
}

/// Rep from arrow-name keyed integer matrices; missing arrows get zero maps.
inline lpa::Rep rep(const lpa::QuiverPtr& q, lpa::Side side, const lpa::Field& f, std::vector<std::size_t> dims,
                    const std::map<std::string, std::vector<std::vector<long long>>>& maps = {}) {
    lpa::Rep z = lpa::Rep::zero_maps(q, side, f, dims);
    std::vector<lpa::Matrix> ms = z.maps();
    for (const auto& [name, rows] : maps) {
        const auto a = q->arrow_index(name);
        if (rows.empty()) continue;
        ms[a] = lpa::Matrix::from_ints(f, rows);
    }
    return lpa::Rep(q, side, f, dims, ms);
}

/// Companion matrix of the monic x^n + c_{n-1} x^{n-1} + ... + c_0, given c_0..c_{n-1}.
inline std::vector<std::vector<long long>> companion(const std::vector<long long>& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = 1;
    for (std::size_t i = 0; i < n; ++i) m[i][n - 1] = -c[i];
    return m;
}

/// Random rep with the given dims and entries in [lo, hi].
inline lpa::Rep random_rep(std::mt19937_64& rng, const lpa::QuiverPtr& q, lpa::Side side, const lpa::Field& f,
                           std::vector<std::size_t> dims, int lo = -1, int hi = 1) {
    lpa::Rep z = lpa::Rep::zero_maps(q, side, f, dims);
    std::vector<lpa::Matrix> ms;
    for (const auto& m : z.maps()) ms.push_back(random_matrix(rng, f, m.rows(), m.cols(), lo, hi));
    return lpa::Rep(q, side, f, dims, ms);
}

inline lpa::GradedVector unit(const lpa::Field& f, std::size_t n, std::size_t i) {
    lpa::GradedVector v(n, lpa::Scalar::zero(f));
    v[i] = lpa::Scalar::one(f);
    return v;
}

/// Multiset comparison of simple factors up to isomorphism.
inline bool same_factors(std::vector<lpa::Rep> a, std::vector<lpa::Rep> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto it = std::find_if(b.begin(), b.end(), [&](const lpa::Rep& y) { return lpa::are_isomorphic(x, y); });
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

}  // namespace fx
