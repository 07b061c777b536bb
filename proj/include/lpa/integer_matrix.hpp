#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpa {

class Field;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool is_diagonal() const;
    bool operator==(const IntMatrix& o) const = default;

    /// Exact determinant (fraction-free Bareiss). Square matrices only.
    mpz_class determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct SmithForm {
    IntMatrix u;  ///< rows x rows, unimodular
    IntMatrix d;  ///< diagonal, d_1 | d_2 | ..., non-negative
    IntMatrix v;  ///< cols x cols, unimodular
    std::size_t rank = 0;
};

/// U * M * V = D with U, V unimodular and D in Smith normal form.
SmithForm smith_normal_form(const IntMatrix& m);

/// Z^free_rank + sum Z/d_i, with d_1 | d_2 | ... and every d_i >= 2.
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of a finite group; 0 when infinite.
    mpz_class order() const;
    std::string to_string() const;
    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

    static FGAbelianGroup cyclic(const mpz_class& n);
    static FGAbelianGroup free(std::size_t rank) { return FGAbelianGroup{rank, {}}; }
    /// Direct sum, renormalised to invariant-factor form.
    FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;
};

struct CokerKer {
    FGAbelianGroup coker;
    std::size_t ker_rank = 0;
};

/// Cokernel and kernel rank of M: Z^cols -> Z^rows (M acts on columns).
CokerKer coker_ker(const IntMatrix& m);

/// Cokernel of M over Z/n, i.e. of [M | n*I].
FGAbelianGroup coker_mod(const IntMatrix& m, const mpz_class& n);

/// Cokernel of the exponent map (k^x)^cols -> (k^x)^rows given by M.
/// Over F_p this is a finite group; over Q it is described structurally
/// through Q^x = Z/2 + (free abelian on the primes).
struct UnitCoker {
    bool structural = false;
    FGAbelianGroup group;            ///< F_p: the cokernel
    FGAbelianGroup two_torsion_part; ///< Q: cokernel on the sign factor Z/2
    FGAbelianGroup per_prime_part;   ///< Q: cokernel on each prime's Z factor
    std::string to_string() const;
    friend bool operator==(const UnitCoker&, const UnitCoker&) = default;
};

UnitCoker unit_coker(const IntMatrix& m, const Field& field);

}  // namespace lpa
