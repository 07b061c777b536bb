#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lpa {

/// The ground field: the rationals or a prime field F_p with p < 2^32.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws MalformedInput unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);
    /// Parses "q" or "fp:<p>".
    static Field parse(const std::string& spec);

    bool is_rational() const { return p_ == 0; }
    bool is_finite() const { return p_ != 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime_trial_division(std::uint64_t n);

struct ModP {
    std::uint64_t value = 0;
    std::uint64_t p = 2;
};

/// Element of a Field. Rationals are kept reduced with positive denominator
/// (mpq_class canonical form); F_p residues in [0, p).
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long n);
    static Scalar from_mpz(const Field& f, const mpz_class& n);
    static Scalar from_mpq(const Field& f, const mpq_class& q);
    /// "a/b" or "a" for Q, a decimal integer (reduced mod p) for F_p.
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<ModP>(v_).value; }
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;
    std::variant<mpq_class, ModP> v_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace lpa
