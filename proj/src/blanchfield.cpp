#include "lpa/blanchfield.hpp"

#include <algorithm>

#include "lpa/errors.hpp"
#include "lpa/weak_algorithm.hpp"

namespace lpa {

Matrix blanchfield_block_map(const Rep& m) {
    if (m.side() != Side::OverE) throw TypeMismatch("Blanchfield test needs a module over P(E)");
    const Quiver& q = *m.quiver();
    std::size_t cols = 0;
    for (const auto& a : q.arrows()) cols += m.dim(a.dst);
    Matrix b(m.field(), m.total_dim(), cols);
    std::size_t c = 0;
    for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
        b.set_block(m.offset(q.arrow(a).src), c, m.map(a));
        c += m.dim(q.arrow(a).dst);
    }
    return b;
}

bool is_blanchfield_rep(const Rep& m) {
    const Matrix b = blanchfield_block_map(m);
    return b.rows() == b.cols() && rank(b) == b.rows();
}

Rep blanchfield_dual(const Rep& m) {
    const Matrix b = blanchfield_block_map(m);
    if (b.rows() != b.cols()) throw NotBlanchfield("block map is not square");
    const auto inv = inverse(b);
    if (!inv) throw NotBlanchfield("block map is not invertible");
    const Quiver& q = *m.quiver();
    std::vector<Matrix> maps;
    std::size_t r = 0;
    for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
        const VertexIndex s = q.arrow(a).src, t = q.arrow(a).dst;
        maps.push_back(inv->block(r, m.offset(s), m.dim(t), m.dim(s)));
        r += m.dim(t);
    }
    return Rep(m.quiver(), Side::OverEbar, m.field(), m.dims(), std::move(maps));
}

bool is_blanchfield_induced(const Rep& n) {
    if (n.side() != Side::OverEbar) throw TypeMismatch("induced Blanchfield test needs a module over P(Ebar)");
    for (auto v : sinks(*n.quiver()))
        if (n.dim(v) != 0) return false;
    return true;
}

std::vector<FactorCount> induced_factors(const Rep& n) {
    std::vector<FactorCount> out;
    for (auto& s : composition_series(n).factors) {
        if (is_coker_nu(s)) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const FactorCount& f) { return are_isomorphic(f.simple, s); });
        if (it != out.end())
            ++it->multiplicity;
        else
            out.push_back({std::move(s), 1});
    }
    return out;
}

TorsionReport sigma_to_lattice(const AlgebraMatrix& sigma) {
    const auto check = sigma_membership(sigma);
    if (!check.member) throw NotSigma("augmentation of the matrix is not invertible");
    const QuiverPtr& qp = sigma.quiver();
    const Quiver& q = *qp;
    const Field& f = sigma.field();
    const std::size_t n = sigma.rows();
    const auto& ct = sigma.col_types();

    // sigma' = eps^{-1} sigma = 1 - tau
    std::vector<std::vector<AlgebraElement>> tau(n, std::vector<AlgebraElement>(n, AlgebraElement(qp, f)));
    long r = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElement s(qp, f);
            for (std::size_t i = 0; i < n; ++i) {
                const Scalar& c = (*check.eps_inverse)(k, i);
                if (!c.is_zero()) s = s + sigma.at(i, j).scaled(c);
            }
            AlgebraElement t = -s;
            t.add_term(Path::trivial(ct[j]), k == j ? Scalar::one(f) : Scalar::zero(f));
            tau[k][j] = t;
            r = std::max(r, t.degree());
        }
    const long R = std::max(r - 1, 0L);

    // free module on the generators, weight 0
    std::vector<FilteredFreeModule::BasisElement> basis;
    for (std::size_t j = 0; j < n; ++j) basis.push_back({"g" + std::to_string(j), ct[j], 0});
    const FilteredFreeModule fm(qp, f, basis);
    std::vector<ModuleVector> rows;
    for (std::size_t k = 0; k < n; ++k) {
        ModuleVector v(fm);
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElement c = -tau[k][j];
            if (k == j) c.add_term(Path::trivial(ct[j]), Scalar::one(f));
            v.set_coeff(fm, j, c);
        }
        rows.push_back(std::move(v));
    }
    const auto wb = weak_basis(fm, rows);

    // monomials lambda g_j with |lambda| <= R
    struct Mono {
        std::size_t j;
        Path lambda;
    };
    std::vector<Mono> monos;
    std::map<std::pair<std::size_t, std::vector<ArrowIndex>>, std::size_t> mono_index;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t len = 0; len <= static_cast<std::size_t>(R); ++len)
            for (auto& p : paths_of_length_into(q, len, ct[j])) {
                mono_index[{j, p.arrows}] = monos.size();
                monos.push_back({j, std::move(p)});
            }
    const std::size_t D = monos.size();
    auto coords = [&](const ModuleVector& v) {
        std::vector<Scalar> x(D, Scalar::zero(f));
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [p, c] : v.coeff(j).terms()) {
                auto it = mono_index.find({j, p.arrows});
                if (it == mono_index.end()) throw std::logic_error("lattice vector outside the spanning set");
                x[it->second] += c;
            }
        return x;
    };

    SpanBuilder rel(f, D);
    std::vector<std::vector<Scalar>> rel_vectors;
    for (const auto& w : wb) {
        const long dw = degree(fm, w);
        if (dw > R) continue;
        const VertexIndex vw = *w.homogeneous_vertex();
        for (const auto& lam : paths_up_to(q, static_cast<std::size_t>(R - dw))) {
            if (lam.range != vw) continue;
            auto x = coords(w.left_mul(AlgebraElement::monomial(qp, f, lam, Scalar::one(f))));
            if (rel.add(x)) rel_vectors.push_back(std::move(x));
        }
    }
    // complement monomials, graded by source vertex of lambda
    const std::size_t nv = q.num_vertices();
    std::vector<std::vector<std::size_t>> chosen(nv);
    SpanBuilder full = rel;
    for (std::size_t k = 0; k < D; ++k) {
        std::vector<Scalar> e(D, Scalar::zero(f));
        e[k] = Scalar::one(f);
        if (full.add(e)) chosen[monos[k].lambda.source].push_back(k);
    }
    std::vector<std::size_t> dims(nv), offset(nv + 1, 0), local(D, 0);
    std::vector<std::size_t> order;  // flat lattice index -> monomial
    for (VertexIndex v = 0; v < nv; ++v) {
        dims[v] = chosen[v].size();
        offset[v + 1] = offset[v] + dims[v];
        for (std::size_t i = 0; i < chosen[v].size(); ++i) {
            local[chosen[v][i]] = i;
            order.push_back(chosen[v][i]);
        }
    }
    // express a vector of W in lattice coordinates: solve [relations | chosen] x = v
    std::vector<std::vector<Scalar>> cols = rel_vectors;
    for (auto k : order) {
        std::vector<Scalar> e(D, Scalar::zero(f));
        e[k] = Scalar::one(f);
        cols.push_back(std::move(e));
    }
    const Matrix change = *inverse(Matrix::from_columns(f, D, cols));
    auto reduce = [&](const std::vector<Scalar>& x) {
        const auto y = change.apply(x);
        return std::vector<Scalar>(y.begin() + static_cast<long>(rel_vectors.size()), y.end());
    };

    // ebar action on monomials
    auto ebar = [&](ArrowIndex e, const Mono& m) {
        ModuleVector out(fm);
        if (m.lambda.is_trivial()) {
            for (std::size_t j = 0; j < n; ++j) out.set_coeff(fm, j, left_transduction(e, tau[m.j][j]));
        } else if (m.lambda.arrows.front() == e) {
            Path rest{q.arrow(e).dst, m.lambda.range, std::vector<ArrowIndex>(m.lambda.arrows.begin() + 1, m.lambda.arrows.end())};
            out.set_coeff(fm, m.j, AlgebraElement::monomial(qp, f, rest, Scalar::one(f)));
        }
        return coords(out);
    };
    std::vector<Matrix> maps;
    for (ArrowIndex e = 0; e < q.num_arrows(); ++e) {
        const VertexIndex s = q.arrow(e).src, t = q.arrow(e).dst;
        Matrix mat(f, dims[t], dims[s]);
        for (std::size_t i = 0; i < dims[s]; ++i) {
            const auto y = reduce(ebar(e, monos[chosen[s][i]]));
            for (std::size_t l = 0; l < dims[t]; ++l) mat(l, i) = y[offset[t] + l];
        }
        maps.push_back(std::move(mat));
    }
    TorsionReport out{Rep(qp, Side::OverEbar, f, dims, std::move(maps)), {}, 0, {}, false};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> e(D, Scalar::zero(f));
        e[mono_index.at({j, {}})] = Scalar::one(f);
        out.generator_images.push_back(reduce(e));
    }
    out.factors = induced_factors(out.lattice);
    for (const auto& fc : out.factors) out.length += fc.multiplicity;
    out.blanchfield = is_blanchfield_induced(out.lattice);
    return out;
}

Rep lattice_core(const Rep& a) {
    if (!is_blanchfield_induced(a)) throw NotBlanchfield("module is nonzero at a sink");
    const std::size_t n = a.total_dim();
    const Field& f = a.field();
    std::vector<Matrix> arrows;
    for (ArrowIndex e = 0; e < a.maps().size(); ++e) {
        Matrix g(f, n, n);
        g.set_block(a.offset(a.map_target(e)), a.offset(a.map_source(e)), a.map(e));
        arrows.push_back(std::move(g));
    }
    Matrix cur = Matrix::identity(f, n);
    for (;;) {
        SpanBuilder span(f, n);
        std::vector<std::vector<Scalar>> next;
        for (const auto& g : arrows)
            for (std::size_t c = 0; c < cur.cols(); ++c) {
                auto v = g.apply(cur.column(c));
                if (span.add(v)) next.push_back(std::move(v));
            }
        if (next.size() == cur.cols()) break;
        cur = Matrix::from_columns(f, n, next);
    }
    return subrep_from_basis(a, cur).sub;
}

}  // namespace lpa
