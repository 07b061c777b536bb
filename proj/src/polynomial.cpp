#include "lpa/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "lpa/errors.hpp"

namespace lpa {

void poly_trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(a[0].field()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Poly poly_monic(const Poly& f) {
    Poly r = f;
    poly_trim(r);
    if (r.empty()) return r;
    const Scalar inv = r.back().inverse();
    for (auto& c : r) c = c * inv;
    return r;
}

namespace {

// ---------------------------------------------------------------- F_p --------

using U = std::uint64_t;
using FpPoly = std::vector<U>;

struct Fp {
    U p;

    void trim(FpPoly& f) const {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    U add(U a, U b) const { return (a + b) % p; }
    U sub(U a, U b) const { return (a + p - b) % p; }

    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mulmod(a[i], b[j], p));
        trim(r);
        return r;
    }
    void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
        if (b.empty()) throw std::domain_error("polynomial division by zero");
        r = a;
        trim(r);
        q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
        const U inv = invmod(b.back(), p);
        while (r.size() >= b.size()) {
            const std::size_t shift = r.size() - b.size();
            const U c = mulmod(r.back(), inv, p);
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = sub(r[shift + i], mulmod(c, b[i], p));
            trim(r);
        }
        trim(q);
    }
    FpPoly mod(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divmod(a, b, q, r);
        return r;
    }
    FpPoly div(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divmod(a, b, q, r);
        return q;
    }
    FpPoly monic(FpPoly f) const {
        trim(f);
        if (f.empty()) return f;
        const U inv = invmod(f.back(), p);
        for (auto& c : f) c = mulmod(c, inv, p);
        return f;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            FpPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s, t with s a + t b = gcd(a, b) (monic).
    FpPoly ext_gcd(FpPoly a, FpPoly b, FpPoly& s, FpPoly& t) const {
        FpPoly s0{1}, s1{}, t0{}, t1{1};
        trim(a);
        trim(b);
        while (!b.empty()) {
            FpPoly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        const U inv = invmod(a.back(), p);
        for (auto& c : s0) c = mulmod(c, inv, p);
        for (auto& c : t0) c = mulmod(c, inv, p);
        s = s0;
        t = t0;
        return monic(a);
    }
    FpPoly derivative(const FpPoly& f) const {
        FpPoly r;
        for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
        trim(r);
        return r;
    }
    FpPoly powmod_poly(FpPoly base, mpz_class e, const FpPoly& m) const {
        FpPoly result{1};
        result = mod(result, m);
        base = mod(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = mod(mul(result, base), m);
            e >>= 1;
            if (e > 0) base = mod(mul(base, base), m);
        }
        return result;
    }
    bool is_one(const FpPoly& f) const { return f.size() == 1 && f[0] == 1; }

    FpPoly pth_root(const FpPoly& f) const {
        // over F_p, a^p = a, so the p-th root just reads every p-th coefficient
        FpPoly r;
        for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
        trim(r);
        return r;
    }

    void squarefree(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) const {
        if (f.size() <= 1) return;
        const FpPoly d = derivative(f);
        if (d.empty()) {
            squarefree(pth_root(f), mult * static_cast<int>(p), out);
            return;
        }
        FpPoly c = gcd(f, d);
        FpPoly w = div(f, c);
        int i = 1;
        while (!is_one(w)) {
            FpPoly y = gcd(w, c);
            FpPoly z = div(w, y);
            if (z.size() > 1) out.emplace_back(monic(z), i * mult);
            ++i;
            w = y;
            c = div(c, y);
        }
        if (c.size() > 1) squarefree(pth_root(c), mult * static_cast<int>(p), out);
    }

    std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) const {
        std::vector<std::pair<FpPoly, int>> out;
        const FpPoly x{0, 1};
        FpPoly h = mod(x, f);
        int d = 0;
        while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
            ++d;
            h = powmod_poly(h, mpz_class(static_cast<unsigned long>(p)), f);
            FpPoly g = gcd(f, sub(h, x));
            if (!is_one(g)) {
                out.emplace_back(g, d);
                f = div(f, g);
                h = mod(h, f);
            }
        }
        if (f.size() > 1) out.emplace_back(monic(f), static_cast<int>(f.size()) - 1);
        return out;
    }

    void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
        const int n = static_cast<int>(f.size()) - 1;
        if (n == d) {
            out.push_back(monic(f));
            return;
        }
        std::uniform_int_distribution<U> coef(0, p - 1);
        mpz_class pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
        for (;;) {
            FpPoly a(n, 0);
            for (auto& c : a) c = coef(rng);
            trim(a);
            if (a.size() <= 1) continue;
            FpPoly b;
            if (p == 2) {
                FpPoly term = mod(a, f);
                b = term;
                for (int i = 1; i < d; ++i) {
                    term = mod(mul(term, term), f);
                    b = add(b, term);
                }
            } else {
                b = sub(powmod_poly(a, (pd - 1) / 2, f), FpPoly{1});
            }
            FpPoly g = gcd(f, b);
            if (g.size() > 1 && g.size() < f.size()) {
                equal_degree(g, d, rng, out);
                equal_degree(div(f, g), d, rng, out);
                return;
            }
        }
    }

    std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f0) const {
        std::vector<std::pair<FpPoly, int>> out;
        std::vector<std::pair<FpPoly, int>> sqf;
        squarefree(monic(f0), 1, sqf);
        std::mt19937_64 rng(0x5eedULL + p);
        for (const auto& [g, m] : sqf) {
            for (const auto& [h, d] : distinct_degree(g)) {
                std::vector<FpPoly> parts;
                equal_degree(h, d, rng, parts);
                for (auto& q : parts) out.emplace_back(std::move(q), m);
            }
        }
        return out;
    }
};

// ---------------------------------------------------------------- Z ----------

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZPoly primitive(ZPoly f) {
    ztrim(f);
    if (f.empty()) return f;
    mpz_class c = content(f);
    if (f.back() < 0) c = -c;
    for (auto& x : f) x /= c;
    return f;
}

std::optional<ZPoly> zdiv_exact(ZPoly a, const ZPoly& b) {
    ztrim(a);
    if (a.size() < b.size()) {
        if (a.empty()) return ZPoly{};
        return std::nullopt;
    }
    ZPoly q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        const mpz_class c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        ztrim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) return std::nullopt;
    }
    if (!a.empty()) return std::nullopt;
    ztrim(q);
    return q;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}

ZPoly zmod(const ZPoly& f, const mpz_class& m) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_pos(f[i], m);
    ztrim(r);
    return r;
}

ZPoly symmetric(const ZPoly& f, const mpz_class& m) {
    ZPoly r(f.size());
    const mpz_class half = m / 2;
    for (std::size_t i = 0; i < f.size(); ++i) {
        r[i] = mod_pos(f[i], m);
        if (r[i] > half) r[i] -= m;
    }
    ztrim(r);
    return r;
}

FpPoly to_fp(const ZPoly& f, U p) {
    FpPoly r(f.size());
    const mpz_class mp(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_pos(f[i], mp).get_ui();
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
    return r;
}

/// Lifts monic F = G H (mod p) to monic G, H with F = G H (mod p^k). F monic mod p^k.
void hensel_pair(const ZPoly& F, ZPoly& G, ZPoly& H, U p, unsigned k) {
    const Fp fp{p};
    FpPoly s, t;
    fp.ext_gcd(to_fp(G, p), to_fp(H, p), s, t);
    const mpz_class mp(static_cast<unsigned long>(p));
    mpz_class pj = mp;
    for (unsigned j = 1; j < k; ++j) {
        const mpz_class pj1 = pj * mp;
        ZPoly diff = zmul(G, H);
        diff.resize(std::max(diff.size(), F.size()), 0);
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = (i < F.size() ? F[i] : mpz_class(0)) - diff[i];
        ztrim(diff);
        for (auto& c : diff) c = mod_pos(c, pj1) / pj;  // exact: F = GH mod p^j
        const FpPoly e = to_fp(diff, p);
        FpPoly q, dG;
        fp.divmod(fp.mul(e, t), to_fp(G, p), q, dG);
        const FpPoly dH = fp.add(fp.mul(e, s), fp.mul(q, to_fp(H, p)));
        const ZPoly zG = from_fp(dG), zH = from_fp(dH);
        for (std::size_t i = 0; i < zG.size(); ++i) G[i] = mod_pos(G[i] + pj * zG[i], pj1);
        for (std::size_t i = 0; i < zH.size(); ++i) {
            if (i >= H.size()) H.resize(i + 1, 0);
            H[i] = mod_pos(H[i] + pj * zH[i], pj1);
        }
        ztrim(G);
        ztrim(H);
        pj = pj1;
    }
}

/// Lifts factors (monic mod p) of monic F to monic factors mod p^k.
std::vector<ZPoly> hensel_multi(const ZPoly& F, const std::vector<FpPoly>& factors, U p, unsigned k,
                                const mpz_class& pk) {
    if (factors.size() == 1) return {zmod(F, pk)};
    const Fp fp{p};
    const std::size_t half = factors.size() / 2;
    FpPoly g{1}, h{1};
    for (std::size_t i = 0; i < half; ++i) g = fp.mul(g, factors[i]);
    for (std::size_t i = half; i < factors.size(); ++i) h = fp.mul(h, factors[i]);
    ZPoly G = from_fp(g), H = from_fp(h);
    hensel_pair(F, G, H, p, k);
    std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    auto a = hensel_multi(G, left, p, k, pk);
    auto b = hensel_multi(H, right, p, k, pk);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void next_subset(std::vector<std::size_t>& idx, std::size_t n, bool& done) {
    const std::size_t s = idx.size();
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) {
        done = true;
        return;
    }
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
}

/// Irreducible factors of a primitive squarefree integer polynomial with positive lc.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    const mpz_class lc = f.back();
    // prime choice
    U p = 3;
    std::vector<FpPoly> modp;
    for (;; p += 2) {
        if (!is_prime_trial_division(p)) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const Fp fp{p};
        FpPoly fm = to_fp(f, p);
        if (fp.gcd(fm, fp.derivative(fm)).size() != 1) continue;
        modp.clear();
        for (auto& [g, m] : fp.factor(fm)) modp.push_back(g);
        break;
    }
    if (modp.size() == 1) return {f};
    mpz_class norm = 0;
    for (const auto& c : f) norm = std::max(norm, mpz_class(abs(c)));
    mpz_class bound = abs(lc) * norm * mpz_class(static_cast<unsigned long>(n + 1));
    bound <<= static_cast<mp_bitcnt_t>(n);
    const mpz_class mp(static_cast<unsigned long>(p));
    unsigned k = 1;
    mpz_class pk = mp;
    while (pk <= 2 * bound) {
        pk *= mp;
        ++k;
    }
    // monic target lc^{-1} f mod p^k
    mpz_class lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly monic_f = f;
    for (auto& c : monic_f) c = mod_pos(c * lc_inv, pk);
    std::vector<ZPoly> lifted = hensel_multi(monic_f, modp, p, k, pk);

    std::vector<ZPoly> result;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        bool done = false;
        while (!done) {
            const mpz_class cur_lc = f.back();
            ZPoly g{cur_lc};
            for (auto i : idx) g = zmod(zmul(g, lifted[i]), pk);
            g = primitive(symmetric(g, pk));
            if (auto q = zdiv_exact(f, g)) {
                result.push_back(g);
                f = *q;
                std::vector<ZPoly> rest;
                for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(lifted[i]);
                }
                lifted = std::move(rest);
                found = true;
                break;
            }
            next_subset(idx, lifted.size(), done);
        }
        if (!found) ++s;
    }
    if (f.size() > 1) result.push_back(primitive(f));
    return result;
}

// ---------------------------------------------------------------- Q ----------

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmonic(QPoly f) {
    qtrim(f);
    if (f.empty()) return f;
    const mpq_class lc = f.back();
    for (auto& c : f) c /= lc;
    return f;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    qtrim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size() && !r.empty()) {
        const std::size_t shift = r.size() - b.size();
        const mpq_class c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        r.pop_back();
        qtrim(r);
    }
    qtrim(q);
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly q, r;
        qdivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(a);
}

QPoly qdiv(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qdivmod(a, b, q, r);
    return q;
}

QPoly qderiv(const QPoly& f) {
    QPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
    qtrim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

/// Yun's squarefree decomposition in characteristic zero.
std::vector<std::pair<QPoly, int>> yun(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    const QPoly fd = qderiv(f);
    const QPoly a0 = qgcd(f, fd);
    QPoly b = qdiv(f, a0);
    QPoly c = qdiv(fd, a0);
    QPoly d = qsub(c, qderiv(b));
    int i = 1;
    while (b.size() > 1) {
        QPoly a = qgcd(b, d);
        if (a.size() > 1) out.emplace_back(a, i);
        b = qdiv(b, a);
        c = qdiv(d, a);
        d = qsub(c, qderiv(b));
        ++i;
    }
    return out;
}

ZPoly q_to_z(const QPoly& f) {
    mpz_class den = 1;
    for (const auto& c : f) den = lcm(den, mpz_class(c.get_den()));
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_class(f[i] * den);
    return primitive(r);
}

QPoly z_to_q(const ZPoly& f) {
    QPoly r(f.begin(), f.end());
    return qmonic(r);
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == b[i]) continue;
        if (a[i].is_rational()) return a[i].rational() < b[i].rational();
        return a[i].residue() < b[i].residue();
    }
    return false;
}

}  // namespace

std::vector<PolyFactor> factor_polynomial(const Poly& f_in, const Field& field) {
    Poly f = f_in;
    poly_trim(f);
    if (f.empty()) throw MalformedInput("cannot factor the zero polynomial");
    std::vector<PolyFactor> out;
    if (field.is_finite()) {
        const Fp fp{field.characteristic()};
        FpPoly g;
        for (const auto& c : f) g.push_back(c.residue());
        fp.trim(g);
        for (auto& [h, m] : fp.factor(g)) {
            Poly ph;
            for (U c : h) ph.push_back(Scalar::from_mpz(field, mpz_class(static_cast<unsigned long>(c))));
            out.push_back({ph, m});
        }
    } else {
        QPoly g;
        for (const auto& c : f) g.push_back(c.rational());
        for (auto& [h, m] : yun(qmonic(g))) {
            for (const auto& z : zassenhaus(q_to_z(h))) {
                Poly ph;
                for (const auto& c : z_to_q(z)) ph.push_back(Scalar::from_mpq(field, c));
                out.push_back({ph, m});
            }
        }
    }
    // merge equal factors (possible when a factor appears in several squarefree parts)
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.poly, b.poly); });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().poly == pf.poly)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

}  // namespace lpa
