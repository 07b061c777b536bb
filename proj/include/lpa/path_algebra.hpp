#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/quiver.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// Degree of the zero element.
inline constexpr long kNegInf = std::numeric_limits<long>::min();

/// Finitely supported combination of paths in P_k(E). Paths compose left to
/// right: (e f) means e then f, with r(e) = s(f).
class AlgebraElement {
public:
    using Terms = std::map<Path, Scalar, PathLess>;

    AlgebraElement(QuiverPtr q, Field f) : q_(std::move(q)), field_(f) {}

    static AlgebraElement vertex(QuiverPtr q, Field f, VertexIndex v);
    static AlgebraElement arrow(QuiverPtr q, Field f, ArrowIndex a);
    static AlgebraElement monomial(QuiverPtr q, Field f, const Path& p, const Scalar& c);
    /// Sum of all vertex idempotents.
    static AlgebraElement one(QuiverPtr q, Field f);

    const QuiverPtr& quiver() const { return q_; }
    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max path length in the support; kNegInf for zero.
    long degree() const;
    Scalar coefficient(const Path& p) const;
    void add_term(const Path& p, const Scalar& c);

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& s) const;
    bool operator==(const AlgebraElement& o) const;

    /// Terms whose paths have exactly this length.
    AlgebraElement homogeneous_part(std::size_t len) const;
    /// p_v x.
    AlgebraElement left_vertex_part(VertexIndex v) const;

    std::string to_string() const;

private:
    void check_compatible(const AlgebraElement& o) const;

    QuiverPtr q_;
    Field field_;
    Terms terms_;
};

/// Coefficient of each trivial path, one scalar per vertex.
std::vector<Scalar> augmentation(const AlgebraElement& x);

/// delta_gamma: gamma tau -> tau, everything else -> 0.
AlgebraElement right_transduction(const Path& gamma, const AlgebraElement& x);

/// L_e: e lambda -> lambda, everything else (including trivial paths) -> 0.
AlgebraElement left_transduction(ArrowIndex e, const AlgebraElement& x);

/// Matrix over P(E) with vertex types. Entry (i, j) lies in p_{row_i} P p_{col_j};
/// acts on row vectors as a map from the sum of P p_{row_i} to the sum of P p_{col_j}.
class AlgebraMatrix {
public:
    AlgebraMatrix(QuiverPtr q, Field f, std::vector<VertexIndex> row_types, std::vector<VertexIndex> col_types);

    const QuiverPtr& quiver() const { return q_; }
    const Field& field() const { return field_; }
    std::size_t rows() const { return row_types_.size(); }
    std::size_t cols() const { return col_types_.size(); }
    const std::vector<VertexIndex>& row_types() const { return row_types_; }
    const std::vector<VertexIndex>& col_types() const { return col_types_; }

    const AlgebraElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
    /// Throws TypeMismatch if an entry is not in p_{row_i} P p_{col_j}.
    void set(std::size_t i, std::size_t j, AlgebraElement x);

    AlgebraMatrix operator*(const AlgebraMatrix& o) const;
    long degree() const;

private:
    QuiverPtr q_;
    Field field_;
    std::vector<VertexIndex> row_types_, col_types_;
    std::vector<AlgebraElement> entries_;
};

/// Scalar matrix of trivial-path coefficients. Entries with row type != col
/// type are always zero, so this is block-diagonal by vertex.
Matrix augmentation_matrix(const AlgebraMatrix& m);

struct SigmaCheck {
    bool member = false;
    std::optional<Matrix> eps_inverse;
};

/// Square and epsilon-invertible. Throws ShapeMismatch on non-square input.
SigmaCheck sigma_membership(const AlgebraMatrix& m);
bool is_invertible_eps(const AlgebraMatrix& m);

}  // namespace lpa
