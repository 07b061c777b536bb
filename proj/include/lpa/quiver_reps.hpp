#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/matrix.hpp"
#include "lpa/path_algebra.hpp"
#include "lpa/quiver.hpp"

namespace lpa {

enum class Side { OverE, OverEbar };

std::string side_name(Side s);

/// Finite-dimensional left module over P(E) (OverE) or P(Ebar) (OverEbar).
///
/// Write F for the quiver the algebra is built on (E, or the inverse quiver).
/// Arrow f of F acts as a map comp(r_F(f)) -> comp(s_F(f)), stored as a
/// dims[s_F(f)] x dims[r_F(f)] matrix. Arrow indices of F and E agree, so for
/// OverEbar the map of arrow e goes comp(s(e)) -> comp(r(e)).
class Rep {
public:
    Rep(QuiverPtr e, Side side, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps);
    static Rep zero_maps(QuiverPtr e, Side side, Field f, std::vector<std::size_t> dims);
    /// Same quiver, side and field as `model`, new data.
    static Rep like(const Rep& model, std::vector<std::size_t> dims, std::vector<Matrix> maps);

    const QuiverPtr& quiver() const { return e_; }
    /// The quiver whose path algebra acts (E or its inverse).
    const QuiverPtr& algebra_quiver() const { return f_quiver_; }
    Side side() const { return side_; }
    const Field& field() const { return field_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(VertexIndex v) const { return dims_.at(v); }
    std::size_t total_dim() const { return offsets_.back(); }
    std::size_t offset(VertexIndex v) const { return offsets_.at(v); }
    const Matrix& map(ArrowIndex a) const { return maps_.at(a); }
    const std::vector<Matrix>& maps() const { return maps_; }

    /// Source and target vertex of the linear map of arrow a.
    VertexIndex map_source(ArrowIndex a) const;
    VertexIndex map_target(ArrowIndex a) const;

    /// Projections onto each nonzero component and the arrow maps, as total_dim square matrices.
    std::vector<Matrix> generator_matrices() const;

private:
    Rep(QuiverPtr e, QuiverPtr fq, Side side, Field f, std::vector<std::size_t> dims, std::vector<Matrix> maps);

    QuiverPtr e_, f_quiver_;
    Side side_;
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::vector<Matrix> maps_;
};

/// Graded vectors are flat, components concatenated in vertex order.
using GradedVector = std::vector<Scalar>;

GradedVector act(const Rep& rep, const AlgebraElement& x, const GradedVector& v);

struct SubRep {
    Rep sub;
    /// Per vertex, dims[v] x sub.dims[v]; columns are the basis of the component.
    std::vector<Matrix> inclusion;
};

SubRep submodule_generated(const Rep& rep, const std::vector<GradedVector>& vectors);
/// Subrepresentation spanned by an arrow-stable graded subspace given by columns.
SubRep subrep_from_basis(const Rep& rep, const Matrix& columns);
Rep quotient(const Rep& rep, const SubRep& sub);
/// Flat inclusion matrix of a subrep (total_dim x sub.total_dim).
Matrix flat_inclusion(const Rep& rep, const SubRep& sub);

/// A proper nonzero submodule, or nullopt when the module is simple or zero.
std::optional<SubRep> proper_submodule(const Rep& rep, std::uint64_t seed = 0);

bool is_simple(const Rep& rep);

struct CompSeries {
    std::vector<Rep> factors;  ///< in extraction order (bottom up)
    std::size_t length() const { return factors.size(); }
};

CompSeries composition_series(const Rep& rep, std::uint64_t seed = 0);

/// Basis of the intertwiner space Hom(a, b), each element as per-vertex matrices.
std::vector<std::vector<Matrix>> hom_space(const Rep& a, const Rep& b);
bool are_isomorphic(const Rep& a, const Rep& b);

/// m with End(S) = F_{p^m}. Throws NotSimple.
std::size_t endomorphism_field_degree(const Rep& simple);

/// One-dimensional OverEbar module at non-sink i with zero action. Throws SinkVertex.
Rep coker_nu(const QuiverPtr& e, const Field& f, VertexIndex i);
std::optional<VertexIndex> is_coker_nu(const Rep& rep);

bool is_killed(const Rep& rep);
std::size_t induced_length(const Rep& rep);

/// Presentation P1 -> P0 -> rep -> 0 over P(F). Rows are (arrow f, basis k of
/// comp r_F(f)) of type s_F(f); columns are (vertex v, basis l) of type v.
AlgebraMatrix standard_resolution(const Rep& rep);

/// [P0] - [P1] of a presentation matrix: column types minus row types, in Z^d.
std::vector<long> resolution_class(const AlgebraMatrix& m);

/// (Id - A_F) dimvec.
std::vector<long> euler_characteristic(const Rep& rep);

}  // namespace lpa
