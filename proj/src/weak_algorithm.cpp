#include "lpa/weak_algorithm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

// ---- FilteredFreeModule ------------------------------------------------------

FilteredFreeModule::FilteredFreeModule(QuiverPtr q, Field f, std::vector<BasisElement> basis)
    : q_(std::move(q)), field_(f), basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].vertex >= q_->num_vertices()) throw MalformedInput("basis vertex out of range");
        if (basis_[i].mu < 0) throw MalformedInput("negative mu for basis element " + basis_[i].label);
        if (!lookup_.emplace(basis_[i].label, i).second)
            throw MalformedInput("duplicate basis label " + basis_[i].label);
    }
}

std::size_t FilteredFreeModule::index_of(const std::string& label) const {
    auto it = lookup_.find(label);
    if (it == lookup_.end()) throw MalformedInput("unknown basis label " + label);
    return it->second;
}

FilteredFreeModule FilteredFreeModule::with_mu(const std::vector<long>& mu) const {
    if (mu.size() != basis_.size()) throw ShapeMismatch("mu vector length mismatch");
    auto b = basis_;
    for (std::size_t i = 0; i < b.size(); ++i) b[i].mu = mu[i];
    return FilteredFreeModule(q_, field_, b);
}

// ---- ModuleVector ---------------------------------------------------------------

ModuleVector::ModuleVector(const FilteredFreeModule& m)
    : coeffs_(m.rank(), AlgebraElement(m.quiver(), m.field())) {}

ModuleVector ModuleVector::basis_vector(const FilteredFreeModule& m, std::size_t b) {
    ModuleVector v(m);
    v.set_coeff(m, b, AlgebraElement::vertex(m.quiver(), m.field(), m.basis(b).vertex));
    return v;
}

void ModuleVector::set_coeff(const FilteredFreeModule& m, std::size_t b, AlgebraElement c) {
    for (const auto& [p, s] : c.terms())
        if (p.range != m.basis(b).vertex)
            throw TypeMismatch("coefficient of " + m.basis(b).label + " must lie in P p_" +
                               m.quiver()->vertex_name(m.basis(b).vertex));
    coeffs_.at(b) = std::move(c);
}

bool ModuleVector::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const AlgebraElement& c) { return c.is_zero(); });
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_.at(i);
    return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    ModuleVector r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_.at(i);
    return r;
}

ModuleVector ModuleVector::scaled(const Scalar& s) const {
    ModuleVector r = *this;
    for (auto& c : r.coeffs_) c = c.scaled(s);
    return r;
}

ModuleVector ModuleVector::left_mul(const AlgebraElement& x) const {
    ModuleVector r = *this;
    for (auto& c : r.coeffs_) c = x * c;
    return r;
}

bool ModuleVector::operator==(const ModuleVector& o) const { return coeffs_ == o.coeffs_; }

ModuleVector ModuleVector::vertex_component(VertexIndex v) const {
    ModuleVector r = *this;
    for (auto& c : r.coeffs_) c = c.left_vertex_part(v);
    return r;
}

std::vector<VertexIndex> ModuleVector::support_vertices() const {
    std::set<VertexIndex> s;
    for (const auto& c : coeffs_)
        for (const auto& [p, x] : c.terms()) s.insert(p.source);
    return {s.begin(), s.end()};
}

std::optional<VertexIndex> ModuleVector::homogeneous_vertex() const {
    auto s = support_vertices();
    if (s.size() != 1) return std::nullopt;
    return s[0];
}

std::string ModuleVector::to_string(const FilteredFreeModule& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t b = 0; b < coeffs_.size(); ++b) {
        if (coeffs_[b].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << coeffs_[b].to_string() << ")*" << m.basis(b).label;
    }
    return first ? "0" : os.str();
}

long degree(const FilteredFreeModule& m, const ModuleVector& v) {
    if (v.rank() != m.rank()) throw TypeMismatch("vector rank does not match module");
    long d = kNegInf;
    for (std::size_t b = 0; b < v.rank(); ++b) {
        const long nu = v.coeff(b).degree();
        if (nu != kNegInf) d = std::max(d, nu + m.basis(b).mu);
    }
    return d;
}

namespace {

/// Monomial lambda * b of the free module.
struct Coord {
    std::size_t b;
    Path path;
};

struct CoordLess {
    bool operator()(const Coord& x, const Coord& y) const {
        if (x.b != y.b) return x.b < y.b;
        return PathLess{}(x.path, y.path);
    }
};

/// Growing index of monomials; vectors are sparse maps coordinate -> scalar.
class CoordIndex {
public:
    std::size_t get(const Coord& c) {
        auto [it, inserted] = idx_.try_emplace(c, idx_.size());
        return it->second;
    }
    std::optional<std::size_t> find(const Coord& c) const {
        auto it = idx_.find(c);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return idx_.size(); }

private:
    std::map<Coord, std::size_t, CoordLess> idx_;
};

using Sparse = std::map<std::size_t, Scalar>;

struct Term {
    std::size_t b;
    Path path;
    Scalar c;
};

/// Terms of v with |path| + mu(b) == D.
std::vector<Term> lead_terms(const FilteredFreeModule& m, const ModuleVector& v, long D) {
    std::vector<Term> out;
    for (std::size_t b = 0; b < v.rank(); ++b)
        for (const auto& [p, c] : v.coeff(b).terms())
            if (static_cast<long>(p.length()) + m.basis(b).mu == D) out.push_back({b, p, c});
    return out;
}

/// Coordinates of lambda * terms.
Sparse times_path(const Path& lambda, const std::vector<Term>& terms, CoordIndex& idx) {
    Sparse s;
    for (const auto& t : terms) {
        auto lp = concat(lambda, t.path);
        if (!lp) continue;
        const std::size_t k = idx.get({t.b, *lp});
        auto [it, inserted] = s.try_emplace(k, t.c);
        if (!inserted) it->second += t.c;
    }
    return s;
}

Matrix to_dense(const Field& f, std::size_t rows, const std::vector<Sparse>& cols) {
    Matrix a(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : cols[j]) a(i, j) = c;
    return a;
}

struct Unknown {
    std::size_t member;  // index into family
    Path lambda;
};

ModuleVector monomial_vector(const FilteredFreeModule& m, std::size_t b, const Path& p) {
    ModuleVector v(m);
    v.set_coeff(m, b, AlgebraElement::monomial(m.quiver(), m.field(), p, Scalar::one(m.field())));
    return v;
}

/// Solves lead_D(v) = sum_j r_j lead(family[j]) over j in `candidates`, with
/// r_j homogeneous of degree D - mu(family[j]) and sources in `sources`.
std::optional<std::vector<AlgebraElement>> element_dependence(const FilteredFreeModule& m, const ModuleVector& v,
                                                              long D, const std::vector<ModuleVector>& family,
                                                              const std::vector<long>& degrees,
                                                              const std::vector<VertexIndex>& family_vertex,
                                                              const std::vector<std::size_t>& candidates,
                                                              const std::vector<VertexIndex>& sources) {
    const Quiver& q = *m.quiver();
    CoordIndex idx;
    const auto target_terms = lead_terms(m, v, D);
    Sparse target;
    for (const auto& t : target_terms) {
        auto [it, inserted] = target.try_emplace(idx.get({t.b, t.path}), t.c);
        if (!inserted) it->second += t.c;
    }

    std::vector<Unknown> unknowns;
    std::vector<Sparse> cols;
    const std::set<VertexIndex> src(sources.begin(), sources.end());
    for (auto j : candidates) {
        const long len = D - degrees[j];
        if (len < 0) continue;
        const auto lead = lead_terms(m, family[j], degrees[j]);
        for (const auto& lambda : paths_of_length_into(q, static_cast<std::size_t>(len), family_vertex[j])) {
            if (!src.count(lambda.source)) continue;
            unknowns.push_back({j, lambda});
            cols.push_back(times_path(lambda, lead, idx));
        }
    }
    Matrix a = to_dense(m.field(), idx.size(), cols);
    std::vector<Scalar> rhs(idx.size(), Scalar::zero(m.field()));
    for (const auto& [i, c] : target) rhs[i] = c;
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    std::vector<AlgebraElement> r(family.size(), AlgebraElement(m.quiver(), m.field()));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!(*x)[u].is_zero()) r[unknowns[u].member].add_term(unknowns[u].lambda, (*x)[u]);
    return r;
}

VertexIndex require_homogeneous(const ModuleVector& v) {
    auto h = v.homogeneous_vertex();
    if (!h) throw VertexDecompositionError("family member is not concentrated at a single vertex");
    return *h;
}

}  // namespace

std::optional<std::vector<AlgebraElement>> dependence_solve(const FilteredFreeModule& m,
                                                            const std::vector<ModuleVector>& family, long t) {
    std::vector<AlgebraElement> r(family.size(), AlgebraElement(m.quiver(), m.field()));
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family[i].is_zero()) {
            r[i] = AlgebraElement::vertex(m.quiver(), m.field(), 0);
            return r;
        }
    std::vector<VertexIndex> vert;
    std::vector<long> deg;
    for (const auto& v : family) {
        vert.push_back(require_homogeneous(v));
        deg.push_back(degree(m, v));
    }
    const Quiver& q = *m.quiver();
    CoordIndex idx;
    std::vector<Unknown> unknowns;
    std::vector<Sparse> cols;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const long len = t - deg[i];
        if (len < 0) continue;
        const auto lead = lead_terms(m, family[i], deg[i]);
        for (const auto& lambda : paths_of_length_into(q, static_cast<std::size_t>(len), vert[i])) {
            unknowns.push_back({i, lambda});
            cols.push_back(times_path(lambda, lead, idx));
        }
    }
    if (unknowns.empty()) return std::nullopt;
    const Matrix ns = nullspace(to_dense(m.field(), idx.size(), cols));
    if (ns.cols() == 0) return std::nullopt;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!ns(u, 0).is_zero()) r[unknowns[u].member].add_term(unknowns[u].lambda, ns(u, 0));
    return r;
}

bool is_independent(const FilteredFreeModule& m, const std::vector<ModuleVector>& family, long slack) {
    if (family.empty()) return true;
    long lo = std::numeric_limits<long>::max(), hi = kNegInf;
    for (const auto& v : family) {
        if (v.is_zero()) return false;
        const long d = degree(m, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    for (long t = lo; t <= hi + slack; ++t)
        if (dependence_solve(m, family, t)) return false;
    return true;
}

std::vector<ModuleVector> weak_basis(const FilteredFreeModule& m, const std::vector<ModuleVector>& generators) {
    struct Item {
        ModuleVector v;
        long deg;
        VertexIndex vertex;
        std::size_t order;
    };
    std::vector<Item> items;
    std::size_t order = 0;
    for (const auto& g : generators) {
        if (g.rank() != m.rank()) throw TypeMismatch("generator rank does not match module");
        for (auto v : g.support_vertices()) {
            ModuleVector c = g.vertex_component(v);
            const long d = degree(m, c);
            items.push_back({std::move(c), d, v, order++});
        }
    }
    auto by_degree = [](const Item& a, const Item& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.order < b.order;
    };
    for (;;) {
        std::sort(items.begin(), items.end(), by_degree);
        std::vector<ModuleVector> family;
        std::vector<long> deg;
        std::vector<VertexIndex> vert;
        for (const auto& it : items) {
            family.push_back(it.v);
            deg.push_back(it.deg);
            vert.push_back(it.vertex);
        }
        bool reduced = false;
        for (std::size_t k = items.size(); k-- > 0 && !reduced;) {
            std::vector<std::size_t> cand;
            for (std::size_t j = 0; j < items.size(); ++j)
                if (j != k && deg[j] <= deg[k]) cand.push_back(j);
            if (cand.empty()) continue;
            auto r = element_dependence(m, family[k], deg[k], family, deg, vert, cand, {vert[k]});
            if (!r) continue;
            ModuleVector nv = family[k];
            for (auto j : cand)
                if (!(*r)[j].is_zero()) nv = nv - family[j].left_mul((*r)[j]);
            if (nv.is_zero()) {
                items.erase(items.begin() + static_cast<long>(k));
            } else {
                items[k].deg = degree(m, nv);
                items[k].v = std::move(nv);
            }
            reduced = true;
        }
        if (!reduced) break;
    }
    std::sort(items.begin(), items.end(), by_degree);
    std::vector<ModuleVector> out;
    for (auto& it : items) out.push_back(std::move(it.v));
    return out;
}

NormalForm normal_form(const FilteredFreeModule& m, const ModuleVector& v, const std::vector<ModuleVector>& basis) {
    std::vector<long> deg;
    std::vector<VertexIndex> vert;
    for (const auto& w : basis) {
        vert.push_back(require_homogeneous(w));
        deg.push_back(degree(m, w));
    }
    std::vector<std::size_t> all(basis.size());
    std::iota(all.begin(), all.end(), 0);
    NormalForm nf{v, std::vector<AlgebraElement>(basis.size(), AlgebraElement(m.quiver(), m.field()))};
    while (!nf.remainder.is_zero()) {
        const long D = degree(m, nf.remainder);
        auto r = element_dependence(m, nf.remainder, D, basis, deg, vert, all, nf.remainder.support_vertices());
        if (!r) break;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if ((*r)[j].is_zero()) continue;
            nf.remainder = nf.remainder - basis[j].left_mul((*r)[j]);
            nf.witness[j] = nf.witness[j] + (*r)[j];
        }
    }
    return nf;
}

bool is_member(const FilteredFreeModule& m, const ModuleVector& v, const std::vector<ModuleVector>& basis) {
    return normal_form(m, v, basis).remainder.is_zero();
}

ProjectiveSplit projective_split(const FilteredFreeModule& f, const std::vector<ModuleVector>& relations) {
    const Quiver& q = *f.quiver();
    std::vector<bool> occurs(f.rank(), false);
    for (const auto& r : relations) {
        if (r.rank() != f.rank()) throw TypeMismatch("relation rank does not match module");
        for (std::size_t b = 0; b < f.rank(); ++b)
            if (!r.coeff(b).is_zero()) occurs[b] = true;
    }
    std::vector<long> mu(f.rank(), 1);
    const FilteredFreeModule probe = f.with_mu(mu);
    long n = 0;
    for (const auto& r : relations)
        if (!r.is_zero()) n = std::max(n, degree(probe, r));
    for (std::size_t b = 0; b < f.rank(); ++b)
        if (!occurs[b]) mu[b] = n + 1;

    ProjectiveSplit out{f.with_mu(mu), n, {}, {}, 0, false, false};
    const FilteredFreeModule& m = out.module;
    out.relations_basis = weak_basis(m, relations);
    const auto& W = out.relations_basis;

    // monomials of formal degree t, in a fixed order
    auto monomials = [&](long t) {
        std::vector<Coord> c;
        for (std::size_t b = 0; b < m.rank(); ++b) {
            const long len = t - m.basis(b).mu;
            if (len < 0) continue;
            for (auto& p : paths_of_length_into(q, static_cast<std::size_t>(len), m.basis(b).vertex))
                c.push_back({b, std::move(p)});
        }
        return c;
    };
    // span of lambda * lead(w) at degree t inside the monomial coordinates
    auto leading_span = [&](long t, const std::vector<ModuleVector>& gens, const std::vector<Coord>& mons) {
        CoordIndex idx;
        for (const auto& c : mons) idx.get(c);
        SpanBuilder span(m.field(), mons.size());
        for (const auto& w : gens) {
            const long dw = degree(m, w);
            if (dw > t) continue;
            const auto lead = lead_terms(m, w, dw);
            const VertexIndex vw = *w.homogeneous_vertex();
            for (const auto& lambda : paths_of_length_into(q, static_cast<std::size_t>(t - dw), vw)) {
                std::vector<Scalar> vec(mons.size(), Scalar::zero(m.field()));
                for (const auto& [k, c] : times_path(lambda, lead, idx)) vec[k] += c;
                span.add(vec);
            }
        }
        return span;
    };

    const auto mons = monomials(n + 1);
    SpanBuilder span = leading_span(n + 1, W, mons);
    for (std::size_t k = 0; k < mons.size(); ++k) {
        std::vector<Scalar> e(mons.size(), Scalar::zero(m.field()));
        e[k] = Scalar::one(m.field());
        if (span.add(e)) out.q_gens.push_back(monomial_vector(m, mons[k].b, mons[k].path));
    }

    std::vector<ModuleVector> all = W;
    all.insert(all.end(), out.q_gens.begin(), out.q_gens.end());
    out.independent = is_independent(m, all);

    // degree n + 2: leading terms of N + PB plus arrow multiples of degree n + 1 must fill everything
    {
        const auto mons2 = monomials(n + 2);
        SpanBuilder span2 = leading_span(n + 2, all, mons2);
        CoordIndex idx;
        for (const auto& c : mons2) idx.get(c);
        for (const auto& c : mons) {
            for (ArrowIndex e : q.arrows_into(c.path.source)) {
                Path ep{q.arrow(e).src, c.path.range, {e}};
                ep.arrows.insert(ep.arrows.end(), c.path.arrows.begin(), c.path.arrows.end());
                std::vector<Scalar> vec(mons2.size(), Scalar::zero(m.field()));
                vec[*idx.find({c.b, ep})] = Scalar::one(m.field());
                span2.add(vec);
            }
        }
        out.cutoff_ok = span2.rank() == mons2.size();
    }

    std::size_t dim_mn = 0;
    for (std::size_t b = 0; b < m.rank(); ++b)
        if (m.basis(b).mu <= n)
            dim_mn += count_paths_into_up_to(q, static_cast<std::size_t>(n - m.basis(b).mu), m.basis(b).vertex);
    std::size_t covered = 0;
    for (const auto& w : all) {
        const long dw = degree(m, w);
        if (dw <= n) covered += count_paths_into_up_to(q, static_cast<std::size_t>(n - dw), *w.homogeneous_vertex());
    }
    out.dim_L_mod_Q = dim_mn - covered;
    return out;
}

}  // namespace lpa
