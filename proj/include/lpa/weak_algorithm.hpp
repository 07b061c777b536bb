#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/path_algebra.hpp"

namespace lpa {

/// Free left P(E)-module on a vertex-typed, degree-weighted basis:
/// the direct sum of P p_{vertex(b)}, with formal degree as filtration.
class FilteredFreeModule {
public:
    struct BasisElement {
        std::string label;
        VertexIndex vertex = 0;
        long mu = 0;
    };

    FilteredFreeModule(QuiverPtr q, Field f, std::vector<BasisElement> basis);

    const QuiverPtr& quiver() const { return q_; }
    const Field& field() const { return field_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
    std::size_t index_of(const std::string& label) const;

    /// Same module with new degree weights.
    FilteredFreeModule with_mu(const std::vector<long>& mu) const;

private:
    QuiverPtr q_;
    Field field_;
    std::vector<BasisElement> basis_;
    std::map<std::string, std::size_t> lookup_;
};

/// Element sum_b c_b b with c_b in P p_{vertex(b)}. Coefficients indexed by basis position.
class ModuleVector {
public:
    explicit ModuleVector(const FilteredFreeModule& m);

    static ModuleVector basis_vector(const FilteredFreeModule& m, std::size_t b);

    std::size_t rank() const { return coeffs_.size(); }
    const AlgebraElement& coeff(std::size_t b) const { return coeffs_.at(b); }
    /// Throws TypeMismatch if a support path does not end at vertex(b).
    void set_coeff(const FilteredFreeModule& m, std::size_t b, AlgebraElement c);

    bool is_zero() const;
    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const Scalar& s) const;
    /// r * m (left action).
    ModuleVector left_mul(const AlgebraElement& r) const;
    bool operator==(const ModuleVector& o) const;

    /// p_v m.
    ModuleVector vertex_component(VertexIndex v) const;
    /// Common source vertex of all support paths, if any; nullopt for zero or mixed.
    std::optional<VertexIndex> homogeneous_vertex() const;
    /// Sources occurring in the support.
    std::vector<VertexIndex> support_vertices() const;

    std::string to_string(const FilteredFreeModule& m) const;

private:
    std::vector<AlgebraElement> coeffs_;
};

/// Formal degree max(nu(c_b) + mu(b)); kNegInf for zero.
long degree(const FilteredFreeModule& m, const ModuleVector& v);

/// Some r_i in P p_{n_i}, not all zero, with nu(r_i) + mu(m_i) <= t and
/// mu(sum r_i m_i) < t; nullopt when no witness exists at degree t.
/// Throws VertexDecompositionError if some m_i is not concentrated at one vertex.
std::optional<std::vector<AlgebraElement>> dependence_solve(const FilteredFreeModule& m,
                                                            const std::vector<ModuleVector>& family, long t);

/// True iff dependence_solve finds nothing at any degree up to max degree + slack.
bool is_independent(const FilteredFreeModule& m, const std::vector<ModuleVector>& family, long slack = 2);

/// Weak basis of the submodule generated by `generators`: left independent,
/// generating the same submodule, sorted by degree. Generators that are not
/// vertex-homogeneous are first split into their vertex components.
std::vector<ModuleVector> weak_basis(const FilteredFreeModule& m, const std::vector<ModuleVector>& generators);

struct NormalForm {
    ModuleVector remainder;
    /// m - remainder = sum_b witness[b] * basis[b].
    std::vector<AlgebraElement> witness;
};

NormalForm normal_form(const FilteredFreeModule& m, const ModuleVector& v, const std::vector<ModuleVector>& basis);
bool is_member(const FilteredFreeModule& m, const ModuleVector& v, const std::vector<ModuleVector>& basis);

struct ProjectiveSplit {
    FilteredFreeModule module;          ///< the free module with the reassigned weights
    long n = 0;                         ///< max formal degree of the relations
    std::vector<ModuleVector> relations_basis;  ///< weak basis of N
    std::vector<ModuleVector> q_gens;   ///< representatives in F of generators of Q
    std::size_t dim_L_mod_Q = 0;
    bool independent = false;           ///< relations basis together with q_gens is independent
    bool cutoff_ok = false;             ///< nothing new appears at degree n + 2
};

/// L = F / N contains a projective Q (generated freely by q_gens) with L/Q finite-dimensional.
ProjectiveSplit projective_split(const FilteredFreeModule& f, const std::vector<ModuleVector>& relations);

}  // namespace lpa
