#pragma once

#include <vector>

#include "lpa/path_algebra.hpp"
#include "lpa/quiver_reps.hpp"

namespace lpa {

/// The block map (m_e) -> sum_e e m_e from the sum of p_{r(e)}M to M, as a matrix.
Matrix blanchfield_block_map(const Rep& m);

/// The block map is bijective. Needs an OverE module.
bool is_blanchfield_rep(const Rep& m);

/// OverEbar module on the same space with ebar m = e-component of the inverse block map.
/// Throws NotBlanchfield.
Rep blanchfield_dual(const Rep& m);

/// L(E) (x) N is Blanchfield iff N vanishes at every sink of E.
bool is_blanchfield_induced(const Rep& n);

struct FactorCount {
    Rep simple;
    std::size_t multiplicity = 0;
};

/// Composition factors that are not coker nu, grouped by isomorphism class.
std::vector<FactorCount> induced_factors(const Rep& n);

struct TorsionReport {
    Rep lattice;
    std::vector<GradedVector> generator_images;
    std::size_t length = 0;
    std::vector<FactorCount> factors;
    bool blanchfield = false;
};

/// Lattice of coker(sigma) for a square sigma over P(E) in Sigma. Throws NotSigma.
TorsionReport sigma_to_lattice(const AlgebraMatrix& sigma);

/// Stable image of A -> sum_e ebar A. Throws NotBlanchfield.
Rep lattice_core(const Rep& a);

}  // namespace lpa
