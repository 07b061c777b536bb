#include "lpa/path_algebra.hpp"

#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

AlgebraElement AlgebraElement::vertex(QuiverPtr q, Field f, VertexIndex v) {
    return monomial(std::move(q), f, Path::trivial(v), Scalar::one(f));
}

AlgebraElement AlgebraElement::arrow(QuiverPtr q, Field f, ArrowIndex a) {
    const Arrow& ar = q->arrow(a);
    return monomial(std::move(q), f, Path{ar.src, ar.dst, {a}}, Scalar::one(f));
}

AlgebraElement AlgebraElement::monomial(QuiverPtr q, Field f, const Path& p, const Scalar& c) {
    AlgebraElement x(std::move(q), f);
    x.add_term(p, c);
    return x;
}

AlgebraElement AlgebraElement::one(QuiverPtr q, Field f) {
    AlgebraElement x(q, f);
    for (VertexIndex v = 0; v < q->num_vertices(); ++v) x.add_term(Path::trivial(v), Scalar::one(f));
    return x;
}

long AlgebraElement::degree() const {
    if (terms_.empty()) return kNegInf;
    return static_cast<long>(terms_.rbegin()->first.length());
}

Scalar AlgebraElement::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const Path& p, const Scalar& c) {
    if (c.is_zero()) return;
    if (!(c.field() == field_)) throw FieldMismatch("coefficient field differs from element field");
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("algebra elements over different fields");
    if (q_ != o.q_ && !(*q_ == *o.q_)) throw QuiverMismatch("algebra elements over different quivers");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(q_, field_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_compatible(o);
    AlgebraElement r(q_, field_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            if (auto ab = concat(a, b)) r.add_term(*ab, ca * cb);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement r(q_, field_);
    if (s.is_zero()) return r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * s);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (!(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [p, c] : terms_) {
        if (!(p == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

AlgebraElement AlgebraElement::homogeneous_part(std::size_t len) const {
    AlgebraElement r(q_, field_);
    for (const auto& [p, c] : terms_)
        if (p.length() == len) r.terms_.emplace(p, c);
    return r;
}

AlgebraElement AlgebraElement::left_vertex_part(VertexIndex v) const {
    AlgebraElement r(q_, field_);
    for (const auto& [p, c] : terms_)
        if (p.source == v) r.terms_.emplace(p, c);
    return r;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << '(' << c.to_string() << ")*";
        os << path_to_string(*q_, p);
    }
    return os.str();
}

std::vector<Scalar> augmentation(const AlgebraElement& x) {
    std::vector<Scalar> out(x.quiver()->num_vertices(), Scalar::zero(x.field()));
    for (const auto& [p, c] : x.terms())
        if (p.is_trivial()) out[p.source] += c;
    return out;
}

AlgebraElement right_transduction(const Path& gamma, const AlgebraElement& x) {
    AlgebraElement r(x.quiver(), x.field());
    for (const auto& [p, c] : x.terms()) {
        if (p.source != gamma.source || p.length() < gamma.length()) continue;
        if (!std::equal(gamma.arrows.begin(), gamma.arrows.end(), p.arrows.begin())) continue;
        Path rest{gamma.range, p.range, std::vector<ArrowIndex>(p.arrows.begin() + static_cast<long>(gamma.length()), p.arrows.end())};
        r.add_term(rest, c);
    }
    return r;
}

AlgebraElement left_transduction(ArrowIndex e, const AlgebraElement& x) {
    const Quiver& q = *x.quiver();
    return right_transduction(Path{q.arrow(e).src, q.arrow(e).dst, {e}}, x);
}

AlgebraMatrix::AlgebraMatrix(QuiverPtr q, Field f, std::vector<VertexIndex> row_types,
                             std::vector<VertexIndex> col_types)
    : q_(std::move(q)), field_(f), row_types_(std::move(row_types)), col_types_(std::move(col_types)) {
    for (auto v : row_types_)
        if (v >= q_->num_vertices()) throw TypeMismatch("row type out of range");
    for (auto v : col_types_)
        if (v >= q_->num_vertices()) throw TypeMismatch("column type out of range");
    entries_.assign(row_types_.size() * col_types_.size(), AlgebraElement(q_, field_));
}

void AlgebraMatrix::set(std::size_t i, std::size_t j, AlgebraElement x) {
    if (i >= rows() || j >= cols()) throw ShapeMismatch("matrix index out of range");
    for (const auto& [p, c] : x.terms())
        if (p.source != row_types_[i] || p.range != col_types_[j])
            throw TypeMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) + ") not in p_" +
                               q_->vertex_name(row_types_[i]) + " P p_" + q_->vertex_name(col_types_[j]));
    entries_[i * cols() + j] = std::move(x);
}

AlgebraMatrix AlgebraMatrix::operator*(const AlgebraMatrix& o) const {
    if (cols() != o.rows()) throw ShapeMismatch("algebra matrix product shape mismatch");
    if (col_types_ != o.row_types_) throw TypeMismatch("algebra matrix product type mismatch");
    AlgebraMatrix r(q_, field_, row_types_, o.col_types_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < o.cols(); ++j) {
            AlgebraElement acc(q_, field_);
            for (std::size_t k = 0; k < cols(); ++k) acc = acc + at(i, k) * o.at(k, j);
            r.entries_[i * r.cols() + j] = std::move(acc);
        }
    return r;
}

long AlgebraMatrix::degree() const {
    long d = kNegInf;
    for (const auto& x : entries_) d = std::max(d, x.degree());
    return d;
}

Matrix augmentation_matrix(const AlgebraMatrix& m) {
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.row_types()[i] != m.col_types()[j]) continue;
            out(i, j) = m.at(i, j).coefficient(Path::trivial(m.row_types()[i]));
        }
    return out;
}

SigmaCheck sigma_membership(const AlgebraMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("sigma membership needs a square matrix");
    SigmaCheck out;
    // blockwise by vertex: an invertible epsilon needs matching type multisets
    std::vector<std::size_t> rc(m.quiver()->num_vertices(), 0), cc(rc.size(), 0);
    for (auto v : m.row_types()) ++rc[v];
    for (auto v : m.col_types()) ++cc[v];
    if (rc != cc) return out;
    auto inv = inverse(augmentation_matrix(m));
    if (!inv) return out;
    out.member = true;
    out.eps_inverse = std::move(inv);
    return out;
}

bool is_invertible_eps(const AlgebraMatrix& m) { return sigma_membership(m).member; }

}  // namespace lpa
