#include "lpa/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    if (!(field_ == o.field_)) throw FieldMismatch("matrix product across fields");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, c));
    return out;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw ShapeMismatch("hstack row mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw ShapeMismatch("vstack column mismatch");
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
    if (v.size() != dim_) throw ShapeMismatch("span vector length mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = v[pivots_[k]];
        if (c.is_zero()) continue;
        const auto& r = rows_[k];
        for (std::size_t j = pivots_[k]; j < dim_; ++j)
            if (!r[j].is_zero()) v[j] -= c * r[j];
    }
    return v;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
    for (const auto& x : reduce(v))
        if (!x.is_zero()) return false;
    return true;
}

bool SpanBuilder::add(const std::vector<Scalar>& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    const Scalar inv = r[p].inverse();
    for (std::size_t j = p; j < dim_; ++j) r[j] = r[j] * inv;
    // keep earlier rows reduced at the new pivot so reduce() stays a single pass
    for (auto& row : rows_) {
        const Scalar c = row[p];
        if (c.is_zero()) continue;
        for (std::size_t j = p; j < dim_; ++j)
            if (!r[j].is_zero()) row[j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix c = m;
    return rref_in_place(c).size();
}

Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(m.field(), m.cols(), basis);
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw ShapeMismatch("solve: rhs length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug = Matrix::hstack(m, Matrix::identity(m.field(), n));
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    return aug.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Scalar::zero(m.field());
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det = det * a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
    Matrix r = m;
    return rref_in_place(r);
}

Matrix column_space(const Matrix& m) {
    const auto cols = independent_columns(m);
    std::vector<std::vector<Scalar>> basis;
    for (auto c : cols) basis.push_back(m.column(c));
    return Matrix::from_columns(m.field(), m.rows(), basis);
}

std::vector<Scalar> characteristic_polynomial(const Matrix& input) {
    if (input.rows() != input.cols()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
    const Field f = input.field();
    const std::size_t n = input.rows();
    // Reduce to upper Hessenberg form by similarity, then expand.
    Matrix h = input;
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t p = c + 1;
        while (p < n && h(p, c).is_zero()) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
        }
        const Scalar inv = h(c + 1, c).inverse();
        for (std::size_t i = c + 2; i < n; ++i) {
            if (h(i, c).is_zero()) continue;
            const Scalar t = h(i, c) * inv;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= t * h(c + 1, j);   // row_i -= t row_{c+1}
            for (std::size_t k = 0; k < n; ++k) h(k, c + 1) += t * h(k, i);   // col_{c+1} += t col_i
        }
    }
    // p_k = charpoly of leading k x k block
    std::vector<std::vector<Scalar>> polys(n + 1);
    polys[0] = {Scalar::one(f)};
    for (std::size_t k = 1; k <= n; ++k) {
        // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} * prod_{j=i+1}^{k} h_{j,j-1} * p_{i-1}
        std::vector<Scalar> pk(k + 1, Scalar::zero(f));
        const auto& prev = polys[k - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            pk[d + 1] += prev[d];
            pk[d] -= h(k - 1, k - 1) * prev[d];
        }
        Scalar prod = Scalar::one(f);
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = prod * h(i + 1, i);
            if (prod.is_zero()) break;
            const Scalar coef = h(i, k - 1) * prod;
            const auto& pi = polys[i];
            for (std::size_t d = 0; d < pi.size(); ++d) pk[d] -= coef * pi[d];
        }
        polys[k] = std::move(pk);
    }
    return polys[n];
}

Matrix evaluate_polynomial(const std::vector<Scalar>& coeffs, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix acc(m.field(), n, n);
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[d];
    }
    return acc;
}

}  // namespace lpa
