#include "lpa/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lpa/scalar.hpp"

namespace lpa {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged IntMatrix initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    SmithForm out{IntMatrix::identity(rows), input, IntMatrix::identity(cols), 0};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t s = 0; s < steps; ++s) {
        for (;;) {
            // pivot: smallest non-zero |entry| in the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j)
                    if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return out;  // trailing block is zero
            swap_rows(d, s, pr);
            swap_rows(u, s, pr);
            swap_cols(d, s, pc);
            swap_cols(v, s, pc);

            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (d(i, s) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, s).get_mpz_t(), d(s, s).get_mpz_t());
                add_row(d, i, s, -q);
                add_row(u, i, s, -q);
                if (d(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (d(s, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(s, j).get_mpz_t(), d(s, s).get_mpz_t());
                add_col(d, j, s, -q);
                add_col(v, j, s, -q);
                if (d(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the remaining block by the pivot
            std::size_t bad_row = rows;
            for (std::size_t i = s + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row != rows) {
                add_row(d, s, bad_row, 1);
                add_row(u, s, bad_row, 1);
                continue;
            }
            if (d(s, s) < 0) {
                negate_row(d, s);
                negate_row(u, s);
            }
            ++out.rank;
            break;
        }
    }
    return out;
}

mpz_class FGAbelianGroup::order() const {
    if (free_rank) return 0;
    mpz_class n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    if (free_rank) {
        s += (s.empty() ? "" : " + ") + std::string("Z");
        if (free_rank > 1) s += "^" + std::to_string(free_rank);
    }
    return s;
}

FGAbelianGroup FGAbelianGroup::cyclic(const mpz_class& n) {
    if (n == 0) return free(1);
    if (abs(n) == 1) return {};
    return FGAbelianGroup{0, {abs(n)}};
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
    const std::size_t t = invariant_factors.size() + other.invariant_factors.size();
    IntMatrix m(t, t);
    std::size_t i = 0;
    for (const auto& d : invariant_factors) { m(i, i) = d; ++i; }
    for (const auto& d : other.invariant_factors) { m(i, i) = d; ++i; }
    FGAbelianGroup g = coker_ker(m).coker;
    g.free_rank = free_rank + other.free_rank;
    return g;
}

CokerKer coker_ker(const IntMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    CokerKer out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const mpz_class di = (i < m.cols()) ? snf.d(i, i) : mpz_class(0);
        if (di == 0) ++out.coker.free_rank;
        else if (di != 1) out.coker.invariant_factors.push_back(di);
    }
    out.ker_rank = m.cols() - snf.rank;
    return out;
}

FGAbelianGroup coker_mod(const IntMatrix& m, const mpz_class& n) {
    IntMatrix ext(m.rows(), m.cols() + m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) ext(i, j) = m(i, j);
        ext(i, m.cols() + i) = n;
    }
    return coker_ker(ext).coker;
}

UnitCoker unit_coker(const IntMatrix& m, const Field& field) {
    UnitCoker out;
    if (field.is_finite()) {
        out.group = coker_mod(m, mpz_class(static_cast<unsigned long>(field.characteristic() - 1)));
    } else {
        out.structural = true;
        out.two_torsion_part = coker_mod(m, 2);
        out.per_prime_part = coker_ker(m).coker;
    }
    return out;
}

std::string UnitCoker::to_string() const {
    if (!structural) return group.to_string();
    return "(" + two_torsion_part.to_string() + ") + sum over primes of (" + per_prime_part.to_string() + ")";
}

}  // namespace lpa
