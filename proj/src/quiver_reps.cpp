#include "lpa/quiver_reps.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lpa/errors.hpp"
#include "lpa/polynomial.hpp"

namespace lpa {

std::string side_name(Side s) { return s == Side::OverE ? "E" : "Ebar"; }

Rep::Rep(QuiverPtr e, Side side, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : Rep(e, side == Side::OverE ? e : std::make_shared<const Quiver>(inverse_quiver(*e)), side, f, std::move(dims),
          std::move(maps)) {}

Rep::Rep(QuiverPtr e, QuiverPtr fq, Side side, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : e_(std::move(e)), f_quiver_(std::move(fq)), side_(side), field_(f), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != e_->num_vertices()) throw ShapeMismatch("dimension vector length differs from vertex count");
    if (maps_.size() != e_->num_arrows()) throw ShapeMismatch("one matrix per arrow required");
    offsets_.assign(dims_.size() + 1, 0);
    for (std::size_t v = 0; v < dims_.size(); ++v) offsets_[v + 1] = offsets_[v] + dims_[v];
    for (ArrowIndex a = 0; a < maps_.size(); ++a) {
        const Matrix& m = maps_[a];
        if (m.rows() != dims_[map_target(a)] || m.cols() != dims_[map_source(a)])
            throw ShapeMismatch("matrix of arrow " + e_->arrow(a).name + " has shape " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", expected " +
                                std::to_string(dims_[map_target(a)]) + "x" + std::to_string(dims_[map_source(a)]));
        if (!(m.field() == field_) && !m.empty()) throw FieldMismatch("arrow matrix over a different field");
    }
}

Rep Rep::zero_maps(QuiverPtr e, Side side, Field f, std::vector<std::size_t> dims) {
    if (dims.size() != e->num_vertices()) throw ShapeMismatch("dimension vector length differs from vertex count");
    std::vector<Matrix> maps;
    for (const auto& a : e->arrows()) {
        const VertexIndex src = side == Side::OverE ? a.dst : a.src;
        const VertexIndex tgt = side == Side::OverE ? a.src : a.dst;
        maps.emplace_back(f, dims.at(tgt), dims.at(src));
    }
    return Rep(std::move(e), side, f, std::move(dims), std::move(maps));
}

Rep Rep::like(const Rep& model, std::vector<std::size_t> dims, std::vector<Matrix> maps) {
    return Rep(model.e_, model.f_quiver_, model.side_, model.field_, std::move(dims), std::move(maps));
}

VertexIndex Rep::map_source(ArrowIndex a) const { return f_quiver_->arrow(a).dst; }
VertexIndex Rep::map_target(ArrowIndex a) const { return f_quiver_->arrow(a).src; }

std::vector<Matrix> Rep::generator_matrices() const {
    const std::size_t n = total_dim();
    std::vector<Matrix> gens;
    std::size_t nonzero = 0;
    for (auto d : dims_) nonzero += d > 0;
    if (nonzero > 1)
        for (VertexIndex v = 0; v < dims_.size(); ++v) {
            if (dims_[v] == 0) continue;
            Matrix p(field_, n, n);
            for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) p(i, i) = Scalar::one(field_);
            gens.push_back(std::move(p));
        }
    for (ArrowIndex a = 0; a < maps_.size(); ++a) {
        if (maps_[a].empty() || maps_[a].is_zero()) continue;
        Matrix g(field_, n, n);
        g.set_block(offsets_[map_target(a)], offsets_[map_source(a)], maps_[a]);
        gens.push_back(std::move(g));
    }
    return gens;
}

GradedVector act(const Rep& rep, const AlgebraElement& x, const GradedVector& v) {
    if (v.size() != rep.total_dim()) throw ShapeMismatch("graded vector length differs from module dimension");
    const QuiverPtr& fq = rep.algebra_quiver();
    if (x.quiver() != fq && !(*x.quiver() == *fq))
        throw QuiverMismatch("element is not in the path algebra acting on this module");
    GradedVector out(rep.total_dim(), Scalar::zero(rep.field()));
    for (const auto& [p, c] : x.terms()) {
        std::vector<Scalar> comp(v.begin() + static_cast<long>(rep.offset(p.range)),
                                 v.begin() + static_cast<long>(rep.offset(p.range) + rep.dim(p.range)));
        for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) comp = rep.map(*it).apply(comp);
        for (std::size_t i = 0; i < comp.size(); ++i) out[rep.offset(p.source) + i] += c * comp[i];
    }
    return out;
}

namespace {

/// Independent vectors spanning the closure of `start` under `gens`.
std::vector<std::vector<Scalar>> spin(const Field& f, std::size_t n, const std::vector<Matrix>& gens,
                                      const std::vector<std::vector<Scalar>>& start) {
    SpanBuilder span(f, n);
    std::vector<std::vector<Scalar>> basis;
    for (const auto& v : start)
        if (span.add(v)) basis.push_back(v);
    for (std::size_t k = 0; k < basis.size() && basis.size() < n; ++k)
        for (const auto& g : gens) {
            auto w = g.apply(basis[k]);
            if (span.add(w)) basis.push_back(std::move(w));
        }
    return basis;
}

Matrix columns_of(const Field& f, std::size_t n, const std::vector<std::vector<Scalar>>& vs) {
    return Matrix::from_columns(f, n, vs);
}

/// Basis of the algebra generated by `gens` (with identity), as flattened matrices.
std::vector<Matrix> algebra_basis(const Field& f, std::size_t n, const std::vector<Matrix>& gens) {
    auto flat = [&](const Matrix& m) {
        std::vector<Scalar> v;
        v.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
        return v;
    };
    SpanBuilder span(f, n * n);
    std::vector<Matrix> basis;
    auto push = [&](Matrix m) {
        if (span.add(flat(m))) basis.push_back(std::move(m));
    };
    push(Matrix::identity(f, n));
    for (const auto& g : gens) push(g);
    for (std::size_t k = 0; k < basis.size() && basis.size() < n * n; ++k)
        for (const auto& g : gens) push(g * basis[k]);
    return basis;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_finite()) {
        std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
        return Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(d(rng))));
    }
    std::uniform_int_distribution<int> d(-3, 3);
    return Scalar::from_int(f, d(rng));
}

bool all_blocks_invertible(const std::vector<Matrix>& x) {
    for (const auto& m : x)
        if (m.rows() > 0 && determinant(m).is_zero()) return false;
    return true;
}

}  // namespace

SubRep subrep_from_basis(const Rep& rep, const Matrix& columns) {
    const Field& f = rep.field();
    const std::size_t nv = rep.dims().size();
    std::vector<Matrix> incl;
    std::vector<std::size_t> sub_dims(nv, 0);
    for (VertexIndex v = 0; v < nv; ++v) {
        const std::size_t d = rep.dim(v);
        SpanBuilder span(f, d);
        std::vector<std::vector<Scalar>> chosen;
        for (std::size_t c = 0; c < columns.cols(); ++c) {
            std::vector<Scalar> comp(d, Scalar::zero(f));
            for (std::size_t i = 0; i < d; ++i) comp[i] = columns(rep.offset(v) + i, c);
            if (span.add(comp)) chosen.push_back(std::move(comp));
        }
        sub_dims[v] = chosen.size();
        incl.push_back(Matrix::from_columns(f, d, chosen));
    }
    std::vector<Matrix> maps;
    for (ArrowIndex a = 0; a < rep.maps().size(); ++a) {
        const VertexIndex s = rep.map_source(a), t = rep.map_target(a);
        Matrix m(f, sub_dims[t], sub_dims[s]);
        for (std::size_t k = 0; k < sub_dims[s]; ++k) {
            auto image = rep.map(a).apply(incl[s].column(k));
            auto coords = solve(incl[t], image);
            if (!coords) throw ShapeMismatch("subspace is not closed under the arrow maps");
            for (std::size_t i = 0; i < sub_dims[t]; ++i) m(i, k) = (*coords)[i];
        }
        maps.push_back(std::move(m));
    }
    return SubRep{Rep::like(rep, sub_dims, std::move(maps)), std::move(incl)};
}

SubRep submodule_generated(const Rep& rep, const std::vector<GradedVector>& vectors) {
    const auto basis = spin(rep.field(), rep.total_dim(), rep.generator_matrices(), vectors);
    // projections keep the closure graded even when generator_matrices omits them
    std::vector<GradedVector> graded;
    for (const auto& b : basis)
        for (VertexIndex v = 0; v < rep.dims().size(); ++v) {
            GradedVector c(rep.total_dim(), Scalar::zero(rep.field()));
            bool nz = false;
            for (std::size_t i = rep.offset(v); i < rep.offset(v) + rep.dim(v); ++i) {
                c[i] = b[i];
                nz = nz || !b[i].is_zero();
            }
            if (nz) graded.push_back(std::move(c));
        }
    const auto closed = spin(rep.field(), rep.total_dim(), rep.generator_matrices(), graded);
    return subrep_from_basis(rep, columns_of(rep.field(), rep.total_dim(), closed));
}

Matrix flat_inclusion(const Rep& rep, const SubRep& sub) {
    Matrix m(rep.field(), rep.total_dim(), sub.sub.total_dim());
    for (VertexIndex v = 0; v < rep.dims().size(); ++v)
        m.set_block(rep.offset(v), sub.sub.offset(v), sub.inclusion[v]);
    return m;
}

Rep quotient(const Rep& rep, const SubRep& sub) {
    const Field& f = rep.field();
    const std::size_t nv = rep.dims().size();
    std::vector<Matrix> tinv;
    std::vector<Matrix> complement;
    std::vector<std::size_t> qdims(nv);
    for (VertexIndex v = 0; v < nv; ++v) {
        const std::size_t d = rep.dim(v);
        SpanBuilder span(f, d);
        std::vector<std::vector<Scalar>> cols;
        for (std::size_t k = 0; k < sub.inclusion[v].cols(); ++k) {
            cols.push_back(sub.inclusion[v].column(k));
            span.add(cols.back());
        }
        std::vector<std::vector<Scalar>> comp;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> e(d, Scalar::zero(f));
            e[i] = Scalar::one(f);
            if (span.add(e)) comp.push_back(std::move(e));
        }
        qdims[v] = comp.size();
        std::vector<std::vector<Scalar>> all = cols;
        all.insert(all.end(), comp.begin(), comp.end());
        tinv.push_back(*inverse(Matrix::from_columns(f, d, all)));
        complement.push_back(Matrix::from_columns(f, d, comp));
    }
    std::vector<Matrix> maps;
    for (ArrowIndex a = 0; a < rep.maps().size(); ++a) {
        const VertexIndex s = rep.map_source(a), t = rep.map_target(a);
        const Matrix full = tinv[t] * (rep.map(a) * complement[s]);
        maps.push_back(full.block(rep.dim(t) - qdims[t], 0, qdims[t], qdims[s]));
    }
    return Rep::like(rep, qdims, std::move(maps));
}

std::optional<SubRep> proper_submodule(const Rep& rep, std::uint64_t seed) {
    const std::size_t n = rep.total_dim();
    if (n <= 1) return std::nullopt;
    const Field& f = rep.field();
    const auto gens = rep.generator_matrices();
    auto proper_from = [&](const std::vector<Scalar>& v) -> std::optional<SubRep> {
        const auto b = spin(f, n, gens, {v});
        if (b.empty() || b.size() == n) return std::nullopt;
        return subrep_from_basis(rep, columns_of(f, n, b));
    };
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (seed * 1000003ULL + n));
    if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
    for (auto i : order) {
        std::vector<Scalar> e(n, Scalar::zero(f));
        e[i] = Scalar::one(f);
        if (auto s = proper_from(e)) return s;
    }
    const auto alg = algebra_basis(f, n, gens);
    if (alg.size() == n * n) return std::nullopt;  // full matrix algebra
    std::vector<Matrix> gens_t;
    for (const auto& g : gens) gens_t.push_back(g.transpose());

    for (int attempt = 0; attempt < 500; ++attempt) {
        Matrix theta(f, n, n);
        for (const auto& b : alg) theta = theta + b.scaled(random_scalar(f, rng));
        const auto cp = characteristic_polynomial(theta);
        for (const auto& pf : factor_polynomial(cp, f)) {
            const Matrix g = evaluate_polynomial(pf.poly, theta);
            const Matrix k = nullspace(g);
            if (k.cols() == 0) continue;
            if (auto s = proper_from(k.column(0))) return s;
            if (static_cast<int>(k.cols()) != poly_degree(pf.poly)) continue;
            const Matrix kt = nullspace(g.transpose());
            const auto w = spin(f, n, gens_t, {kt.column(0)});
            if (w.size() == n) return std::nullopt;  // Norton's criterion: simple
            // annihilator of the dual submodule
            Matrix rows(f, w.size(), n);
            for (std::size_t r = 0; r < w.size(); ++r)
                for (std::size_t c = 0; c < n; ++c) rows(r, c) = w[r][c];
            return subrep_from_basis(rep, nullspace(rows));
        }
    }
    throw std::runtime_error("submodule search did not terminate");
}

bool is_simple(const Rep& rep) { return rep.total_dim() > 0 && !proper_submodule(rep); }

CompSeries composition_series(const Rep& rep, std::uint64_t seed) {
    CompSeries out;
    Rep cur = rep;
    std::uint64_t s = seed;
    while (cur.total_dim() > 0) {
        Rep m = cur;
        Matrix incl = Matrix::identity(cur.field(), cur.total_dim());
        while (auto sub = proper_submodule(m, s)) {
            if (seed != 0) ++s;
            incl = incl * flat_inclusion(m, *sub);
            m = sub->sub;
        }
        out.factors.push_back(m);
        cur = quotient(cur, subrep_from_basis(cur, incl));
    }
    return out;
}

std::vector<std::vector<Matrix>> hom_space(const Rep& a, const Rep& b) {
    if (a.side() != b.side() || !(*a.quiver() == *b.quiver())) throw QuiverMismatch("modules over different algebras");
    if (!(a.field() == b.field())) throw FieldMismatch("modules over different fields");
    const Field& f = a.field();
    const std::size_t nv = a.dims().size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (VertexIndex v = 0; v < nv; ++v) off[v + 1] = off[v] + b.dim(v) * a.dim(v);
    auto var = [&](VertexIndex v, std::size_t i, std::size_t j) { return off[v] + i * a.dim(v) + j; };
    std::size_t neq = 0;
    for (ArrowIndex e = 0; e < a.maps().size(); ++e) neq += b.dim(a.map_target(e)) * a.dim(a.map_source(e));
    Matrix eq(f, neq, off[nv]);
    std::size_t row = 0;
    for (ArrowIndex e = 0; e < a.maps().size(); ++e) {
        const VertexIndex s = a.map_source(e), t = a.map_target(e);
        // B_e X_s - X_t A_e = 0
        for (std::size_t i = 0; i < b.dim(t); ++i)
            for (std::size_t j = 0; j < a.dim(s); ++j, ++row) {
                for (std::size_t k = 0; k < b.dim(s); ++k)
                    if (!b.map(e)(i, k).is_zero()) eq(row, var(s, k, j)) += b.map(e)(i, k);
                for (std::size_t k = 0; k < a.dim(t); ++k)
                    if (!a.map(e)(k, j).is_zero()) eq(row, var(t, i, k)) -= a.map(e)(k, j);
            }
    }
    const Matrix ns = nullspace(eq);
    std::vector<std::vector<Matrix>> out;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        std::vector<Matrix> x;
        for (VertexIndex v = 0; v < nv; ++v) {
            Matrix m(f, b.dim(v), a.dim(v));
            for (std::size_t i = 0; i < b.dim(v); ++i)
                for (std::size_t j = 0; j < a.dim(v); ++j) m(i, j) = ns(var(v, i, j), c);
            x.push_back(std::move(m));
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool are_isomorphic(const Rep& a, const Rep& b) {
    if (a.side() != b.side() || !(*a.quiver() == *b.quiver()) || !(a.field() == b.field())) return false;
    if (a.dims() != b.dims()) return false;
    if (a.total_dim() == 0) return true;
    const auto h = hom_space(a, b);
    if (h.empty()) return false;
    const Field& f = a.field();
    auto combo = [&](const std::vector<Scalar>& c) {
        std::vector<Matrix> x;
        for (std::size_t v = 0; v < a.dims().size(); ++v) {
            Matrix m(f, b.dim(v), a.dim(v));
            for (std::size_t k = 0; k < h.size(); ++k)
                if (!c[k].is_zero()) m = m + h[k][v].scaled(c[k]);
            x.push_back(std::move(m));
        }
        return x;
    };
    std::mt19937_64 rng(0xabcdefULL + h.size());
    for (int t = 0; t < 8; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < h.size(); ++k) c.push_back(random_scalar(f, rng));
        if (all_blocks_invertible(combo(c))) return true;
    }
    if (is_simple(a) && is_simple(b)) return true;  // Schur
    if (f.is_finite()) {
        const std::uint64_t p = f.characteristic();
        double count = 1;
        for (std::size_t k = 0; k < h.size(); ++k) count *= static_cast<double>(p);
        if (count <= 20000) {
            std::vector<std::uint64_t> digits(h.size(), 0);
            for (;;) {
                std::vector<Scalar> c;
                for (auto d : digits) c.push_back(Scalar::from_mpz(f, mpz_class(static_cast<unsigned long>(d))));
                if (all_blocks_invertible(combo(c))) return true;
                std::size_t i = 0;
                while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
                if (i == digits.size()) return false;
            }
        }
    }
    for (int t = 0; t < 200; ++t) {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < h.size(); ++k) c.push_back(random_scalar(f, rng));
        if (all_blocks_invertible(combo(c))) return true;
    }
    return false;
}

std::size_t endomorphism_field_degree(const Rep& simple) {
    if (!is_simple(simple)) throw NotSimple("module is not simple");
    return hom_space(simple, simple).size();
}

Rep coker_nu(const QuiverPtr& e, const Field& f, VertexIndex i) {
    if (i >= e->num_vertices()) throw MalformedInput("vertex out of range");
    if (e->is_sink(i)) throw SinkVertex("coker nu is undefined at the sink " + e->vertex_name(i));
    std::vector<std::size_t> dims(e->num_vertices(), 0);
    dims[i] = 1;
    return Rep::zero_maps(e, Side::OverEbar, f, dims);
}

std::optional<VertexIndex> is_coker_nu(const Rep& rep) {
    if (rep.side() != Side::OverEbar || rep.total_dim() != 1) return std::nullopt;
    VertexIndex i = 0;
    while (rep.dim(i) == 0) ++i;
    if (rep.quiver()->is_sink(i)) return std::nullopt;
    for (const auto& m : rep.maps())
        if (!m.is_zero()) return std::nullopt;
    return i;
}

bool is_killed(const Rep& rep) { return induced_length(rep) == 0; }

std::size_t induced_length(const Rep& rep) {
    if (rep.side() != Side::OverEbar) throw TypeMismatch("induced length needs a module over P(Ebar)");
    std::size_t k = 0;
    for (const auto& s : composition_series(rep).factors)
        if (!is_coker_nu(s)) ++k;
    return k;
}

AlgebraMatrix standard_resolution(const Rep& rep) {
    const QuiverPtr& fq = rep.algebra_quiver();
    const Field& f = rep.field();
    std::vector<VertexIndex> col_types, row_types;
    for (VertexIndex v = 0; v < rep.dims().size(); ++v)
        for (std::size_t l = 0; l < rep.dim(v); ++l) col_types.push_back(v);
    struct RowKey {
        ArrowIndex a;
        std::size_t k;
    };
    std::vector<RowKey> rows;
    for (ArrowIndex a = 0; a < fq->num_arrows(); ++a)
        for (std::size_t k = 0; k < rep.dim(fq->arrow(a).dst); ++k) {
            rows.push_back({a, k});
            row_types.push_back(fq->arrow(a).src);
        }
    AlgebraMatrix m(fq, f, row_types, col_types);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto [a, k] = rows[r];
        const VertexIndex s = fq->arrow(a).src, t = fq->arrow(a).dst;
        std::vector<AlgebraElement> entries(col_types.size(), AlgebraElement(fq, f));
        entries[rep.offset(t) + k] = entries[rep.offset(t) + k] + AlgebraElement::arrow(fq, f, a);
        for (std::size_t l = 0; l < rep.dim(s); ++l) {
            const Scalar& c = rep.map(a)(l, k);
            if (c.is_zero()) continue;
            entries[rep.offset(s) + l] = entries[rep.offset(s) + l] - AlgebraElement::vertex(fq, f, s).scaled(c);
        }
        for (std::size_t c = 0; c < entries.size(); ++c)
            if (!entries[c].is_zero()) m.set(r, c, std::move(entries[c]));
    }
    return m;
}

std::vector<long> resolution_class(const AlgebraMatrix& m) {
    std::vector<long> out(m.quiver()->num_vertices(), 0);
    for (auto v : m.col_types()) ++out[v];
    for (auto v : m.row_types()) --out[v];
    return out;
}

std::vector<long> euler_characteristic(const Rep& rep) {
    const Quiver& fq = *rep.algebra_quiver();
    std::vector<long> chi(rep.dims().begin(), rep.dims().end());
    for (const auto& a : fq.arrows()) chi[a.src] -= static_cast<long>(rep.dim(a.dst));
    return chi;
}

}  // namespace lpa
