#pragma once
// Independent reference computations used only by the tests. They avoid the
// library's weak-algorithm, MeatAxe and Zassenhaus code paths on purpose.

#include <optional>
#include <random>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/path_algebra.hpp"
#include "lpa/weak_algorithm.hpp"

namespace oracle {

using namespace lpa;

inline AlgebraElement random_element(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, std::size_t maxlen,
                                     int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> c(lo, hi);
    AlgebraElement x(q, f);
    for (const auto& p : paths_up_to(*q, maxlen)) x.add_term(p, Scalar::from_int(f, c(rng)));
    return x;
}

/// Dense coordinates of module vectors against an explicit monomial list.
struct MonomialSpace {
    std::vector<std::pair<std::size_t, Path>> monomials;

    MonomialSpace(const FilteredFreeModule& m, long max_degree) {
        for (std::size_t b = 0; b < m.rank(); ++b) {
            const long len = max_degree - m.basis(b).mu;
            if (len < 0) continue;
            for (const auto& p : paths_up_to(*m.quiver(), static_cast<std::size_t>(len)))
                if (p.range == m.basis(b).vertex) monomials.emplace_back(b, p);
        }
    }
    std::optional<std::vector<Scalar>> coords(const Field& f, const ModuleVector& v) const {
        std::vector<Scalar> out(monomials.size(), Scalar::zero(f));
        std::size_t found = 0, total = 0;
        for (std::size_t b = 0; b < v.rank(); ++b) total += v.coeff(b).terms().size();
        for (std::size_t k = 0; k < monomials.size(); ++k) {
            const auto& [b, p] = monomials[k];
            out[k] = v.coeff(b).coefficient(p);
            if (!out[k].is_zero()) ++found;
        }
        if (found != total) return std::nullopt;  // v has terms beyond the truncation
        return out;
    }
};

/// Solves v = sum_i r_i g_i with every nu(r_i) <= deg(v) + slack by plain linear algebra.
inline std::optional<std::vector<AlgebraElement>> brute_force_member(const FilteredFreeModule& m, const ModuleVector& v,
                                                                     const std::vector<ModuleVector>& gens, long slack) {
    const Field f = m.field();
    long dv = degree(m, v);
    if (dv == kNegInf) dv = 0;
    const long rbound = dv + slack;
    long top = dv;
    for (const auto& g : gens) {
        const long dg = degree(m, g);
        if (dg != kNegInf) top = std::max(top, dg + rbound);
    }
    MonomialSpace space(m, top);
    std::vector<std::pair<std::size_t, Path>> unknowns;
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& lam : paths_up_to(*m.quiver(), static_cast<std::size_t>(std::max(rbound, 0L)))) {
            const auto prod = gens[i].left_mul(AlgebraElement::monomial(m.quiver(), f, lam, Scalar::one(f)));
            if (prod.is_zero()) continue;
            unknowns.emplace_back(i, lam);
            cols.push_back(*space.coords(f, prod));
        }
    auto rhs = space.coords(f, v);
    if (!rhs) return std::nullopt;
    auto x = solve(Matrix::from_columns(f, space.monomials.size(), cols), *rhs);
    if (!x) return std::nullopt;
    std::vector<AlgebraElement> r(gens.size(), AlgebraElement(m.quiver(), f));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        r[unknowns[u].first].add_term(unknowns[u].second, (*x)[u]);
    return r;
}

/// dim of (monomials of degree <= D) / span{lambda g : g in gens, deg(lambda g) <= D}.
inline std::size_t truncated_quotient_dim(const FilteredFreeModule& m, const std::vector<ModuleVector>& rels,
                                          const std::vector<ModuleVector>& extra, long D) {
    const Field f = m.field();
    MonomialSpace space(m, D);
    SpanBuilder span(f, space.monomials.size());
    std::vector<ModuleVector> gens = rels;
    gens.insert(gens.end(), extra.begin(), extra.end());
    for (const auto& g : gens) {
        const long dg = degree(m, g);
        if (dg == kNegInf || dg > D) continue;
        for (const auto& lam : paths_up_to(*m.quiver(), static_cast<std::size_t>(D - dg))) {
            const auto prod = g.left_mul(AlgebraElement::monomial(m.quiver(), f, lam, Scalar::one(f)));
            if (prod.is_zero()) continue;
            span.add(*space.coords(f, prod));
        }
    }
    return space.monomials.size() - span.rank();
}

}  // namespace oracle
