#include "lpa/scalar.hpp"

#include <cctype>
#include <limits>

#include "lpa/errors.hpp"

namespace lpa {

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime_trial_division(p))
        throw MalformedInput("field characteristic must be a prime below 2^32, got " +
                             std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& spec) {
    if (spec == "q" || spec == "Q") return rationals();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        if (digits.empty() || digits.size() > 19) throw MalformedInput("bad field spec: " + spec);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw MalformedInput("bad field spec: " + spec);
        return prime(std::stoull(digits));
    }
    throw MalformedInput("bad field spec: " + spec);
}

std::string Field::to_string() const {
    return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0
    return powmod(a, p - 2, p);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long n) {
    Scalar s;
    if (f.is_rational()) {
        s.v_ = mpq_class(mpz_class(static_cast<long>(n)));
    } else {
        const auto p = static_cast<long long>(f.characteristic());
        long long r = n % p;
        if (r < 0) r += p;
        s.v_ = ModP{static_cast<std::uint64_t>(r), f.characteristic()};
    }
    return s;
}

Scalar Scalar::from_mpz(const Field& f, const mpz_class& n) {
    Scalar s;
    if (f.is_rational()) {
        s.v_ = mpq_class(n);
    } else {
        mpz_class r = n % mpz_class(static_cast<unsigned long>(f.characteristic()));
        if (r < 0) r += static_cast<unsigned long>(f.characteristic());
        s.v_ = ModP{r.get_ui(), f.characteristic()};
    }
    return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
    if (f.is_rational()) {
        Scalar s;
        s.v_ = q;
        return s;
    }
    return from_mpz(f, q.get_num()) / from_mpz(f, q.get_den());
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto bad = [&] { return MalformedInput("bad scalar '" + text + "' for field " + f.to_string()); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(text)) throw bad();
        return from_mpz(f, mpz_class(text[0] == '+' ? text.substr(1) : text));
    }
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw bad();
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw bad();
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    if (f.is_finite() && d % static_cast<unsigned long>(f.characteristic()) == 0) throw bad();
    return from_mpq(f, q);
}

Field Scalar::field() const {
    if (const auto* m = std::get_if<ModP>(&v_)) return Field(m->p);
    return Field::rationals();
}

bool Scalar::is_zero() const {
    if (const auto* m = std::get_if<ModP>(&v_)) return m->value == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (const auto* m = std::get_if<ModP>(&v_)) return m->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index()) throw FieldMismatch("scalars from different fields");
    if (const auto* m = std::get_if<ModP>(&v_)) {
        if (m->p != std::get<ModP>(o.v_).p) throw FieldMismatch("scalars from different prime fields");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r;
    if (const auto* m = std::get_if<ModP>(&v_)) {
        const std::uint64_t s = m->value + std::get<ModP>(o.v_).value;
        r.v_ = ModP{s >= m->p ? s - m->p : s, m->p};
    } else {
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r;
    if (const auto* m = std::get_if<ModP>(&v_)) {
        const std::uint64_t b = std::get<ModP>(o.v_).value;
        r.v_ = ModP{m->value >= b ? m->value - b : m->value + m->p - b, m->p};
    } else {
        r.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r;
    if (const auto* m = std::get_if<ModP>(&v_)) {
        r.v_ = ModP{mulmod(m->value, std::get<ModP>(o.v_).value, m->p), m->p};
    } else {
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    Scalar r;
    if (const auto* m = std::get_if<ModP>(&v_)) {
        r.v_ = ModP{invmod(m->value, m->p), m->p};
    } else {
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r;
    if (const auto* m = std::get_if<ModP>(&v_)) {
        r.v_ = ModP{m->value == 0 ? 0 : m->p - m->value, m->p};
    } else {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (const auto* m = std::get_if<ModP>(&v_)) return m->value == std::get<ModP>(o.v_).value;
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::to_string() const {
    if (const auto* m = std::get_if<ModP>(&v_)) return std::to_string(m->value);
    return std::get<mpq_class>(v_).get_str();
}

}  // namespace lpa
