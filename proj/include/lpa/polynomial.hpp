#pragma once

#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<Scalar>;

void poly_trim(Poly& f);
int poly_degree(const Poly& f);  ///< -1 for the zero polynomial
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& f);

struct PolyFactor {
    Poly poly;  ///< monic irreducible
    int multiplicity = 1;
};

/// Complete factorization into monic irreducibles over Q or F_p.
/// Factors are sorted by (degree, coefficients) for determinism.
std::vector<PolyFactor> factor_polynomial(const Poly& f, const Field& field);

}  // namespace lpa
