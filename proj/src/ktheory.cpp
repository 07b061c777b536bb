#include "lpa/ktheory.hpp"

#include <sstream>
#include <stdexcept>

#include "lpa/errors.hpp"
#include "lpa/simples.hpp"

namespace lpa {

std::string target_name(KTarget t) {
    switch (t) {
        case KTarget::Leavitt: return "leavitt";
        case KTarget::Rational: return "rational";
        case KTarget::Regular: return "regular";
    }
    return "";
}

KTarget parse_target(const std::string& s) {
    if (s == "leavitt") return KTarget::Leavitt;
    if (s == "rational") return KTarget::Rational;
    if (s == "regular") return KTarget::Regular;
    throw MalformedInput("unknown target '" + s + "'");
}

std::string fingerprint(const Rep& r) {
    const Quiver& e = *r.quiver();
    const Quiver& fq = *r.algebra_quiver();
    std::ostringstream os;
    for (VertexIndex v = 0; v < e.num_vertices(); ++v) {
        if (v) os << ' ';
        os << e.vertex_name(v) << ':' << r.dim(v);
    }
    for (ArrowIndex a = 0; a < r.maps().size(); ++a) {
        const Matrix& m = r.map(a);
        if (m.rows() == 0 || m.cols() == 0) continue;
        os << ' ' << fq.arrow(a).name << ":[";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).to_string();
            os << ']';
        }
        os << ']';
    }
    return os.str();
}

bool is_acyclic(const Quiver& q) {
    for (VertexIndex v = 0; v < q.num_vertices(); ++v)
        if (!is_forward_acyclic(q, v)) return false;
    return true;
}

namespace {
IntMatrix one_minus_n(const Quiver& q) {
    const auto inc = incidence(q);
    return inc.one - inc.n_e;
}

FGAbelianGroup power(const FGAbelianGroup& g, std::size_t d) {
    FGAbelianGroup out;
    for (std::size_t i = 0; i < d; ++i) out = out.direct_sum(g);
    return out;
}
}  // namespace

CokerKer k0_leavitt(const Quiver& q) { return coker_ker(one_minus_n(q)); }

KReport k1_leavitt(const Quiver& q, const Field& f) {
    const IntMatrix m = one_minus_n(q);
    KReport r;
    r.target = KTarget::Leavitt;
    r.degree = 1;
    r.unit_part = unit_coker(m, f);
    r.integer_part = FGAbelianGroup::free(coker_ker(m).ker_rank);
    return r;
}

BlaSummary bla0(const QuiverPtr& q, const Field& f, std::size_t dmax, bool parallel) {
    if (!f.is_finite()) throw InfiniteFieldUnsupported("Bla summaries need a finite field");
    BlaSummary s;
    s.dmax = dmax;
    s.truncated = !is_acyclic(*q);
    const auto snk = sinks(*q);
    for (auto& simple : enumerate_simples(q, f, dmax, parallel)) {
        const bool nu = is_coker_nu(simple).has_value();
        bool sink = false;
        for (auto j : snk) sink = sink || (simple.total_dim() == 1 && simple.dim(j) == 1);
        if (nu && sink) throw std::logic_error("coker nu and sink simple exclusions overlap");
        if (nu || sink) continue;
        const std::size_t m = endomorphism_field_degree(simple);
        std::string fp = fingerprint(simple);
        s.generators.push_back({std::move(simple), std::move(fp), m});
    }
    return s;
}

std::vector<FGAbelianGroup> bla1(const QuiverPtr& q, const Field& f, std::size_t dmax) {
    std::vector<FGAbelianGroup> out;
    for (const auto& g : bla0(q, f, dmax).generators) {
        mpz_class order;
        mpz_ui_pow_ui(order.get_mpz_t(), f.characteristic(), g.endo_degree);
        out.push_back(FGAbelianGroup::cyclic(order - 1));
    }
    return out;
}

KReport k_rational(const QuiverPtr& q, const Field& f, int degree, std::size_t dmax) {
    if (degree != 1) throw UnsupportedDegree("rational target supports degree 1 only");
    KReport r;
    r.target = KTarget::Rational;
    r.degree = 1;
    const std::size_t d = q->num_vertices();
    UnitCoker u;
    if (f.is_finite()) {
        u.group = power(FGAbelianGroup::cyclic(mpz_class(static_cast<unsigned long>(f.characteristic() - 1))), d);
    } else {
        u.structural = true;
        u.two_torsion_part = power(FGAbelianGroup::cyclic(2), d);
        u.per_prime_part = FGAbelianGroup::free(d);
    }
    r.unit_part = u;
    r.bla_part = bla0(q, f, dmax);
    return r;
}

KReport k_leavitt(const QuiverPtr& q, const Field& f, int degree) {
    if (degree == 1) return k1_leavitt(*q, f);
    if (degree != 0) throw UnsupportedDegree("degree " + std::to_string(degree) + " is not supported");
    KReport r;
    r.target = KTarget::Leavitt;
    r.integer_part = k0_leavitt(*q).coker;
    return r;
}

KReport k_regular(const QuiverPtr& q, const Field& f, int degree, std::size_t dmax) {
    if (degree != 0 && degree != 1) throw UnsupportedDegree("degree " + std::to_string(degree) + " is not supported");
    KReport r = k_leavitt(q, f, degree);
    r.target = KTarget::Regular;
    if (degree == 1) r.bla_part = bla0(q, f, dmax);
    return r;
}

std::string KReport::to_string() const {
    std::ostringstream os;
    os << "K_" << degree << " (" << target_name(target) << ")";
    if (integer_part) os << "\n  integer part: " << integer_part->to_string();
    if (unit_part) os << "\n  unit part: " << unit_part->to_string();
    if (bla_part) {
        os << "\n  Bla_0: Z^" << bla_part->generators.size() << " (dmax " << bla_part->dmax
           << (bla_part->truncated ? ", truncated" : ", complete") << ")";
        for (const auto& g : bla_part->generators) os << "\n    " << g.fingerprint << "  m=" << g.endo_degree;
    }
    return os.str();
}

}  // namespace lpa
