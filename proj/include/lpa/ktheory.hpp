#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/integer_matrix.hpp"
#include "lpa/quiver_reps.hpp"

namespace lpa {

enum class KTarget { Leavitt, Rational, Regular };
std::string target_name(KTarget t);
KTarget parse_target(const std::string& s);

struct BlaGenerator {
    Rep simple;
    std::string fingerprint;
    std::size_t endo_degree = 1;
};

/// Simples of dimension <= dmax that generate Bla_0. truncated is false only
/// when the list is known complete (acyclic quivers).
struct BlaSummary {
    std::size_t dmax = 0;
    std::vector<BlaGenerator> generators;
    bool truncated = true;
};

struct KReport {
    KTarget target = KTarget::Leavitt;
    int degree = 0;
    std::optional<FGAbelianGroup> integer_part;
    std::optional<UnitCoker> unit_part;
    std::optional<BlaSummary> bla_part;

    std::string to_string() const;
};

/// dims and maps, e.g. "v1:2 e~:[[0,1],[1,1]]".
std::string fingerprint(const Rep& r);

bool is_acyclic(const Quiver& q);

/// coker and kernel rank of 1 - N_E.
CokerKer k0_leavitt(const Quiver& q);
KReport k1_leavitt(const Quiver& q, const Field& f);

/// Throws InfiniteFieldUnsupported.
BlaSummary bla0(const QuiverPtr& q, const Field& f, std::size_t dmax, bool parallel = true);
/// Z/(p^m - 1) per Bla_0 generator.
std::vector<FGAbelianGroup> bla1(const QuiverPtr& q, const Field& f, std::size_t dmax);

/// K_1 of the rational closure. degree must be 1, else UnsupportedDegree.
KReport k_rational(const QuiverPtr& q, const Field& f, int degree, std::size_t dmax);
/// K_0 / K_1 of the regular algebra. UnsupportedDegree outside {0, 1}.
KReport k_regular(const QuiverPtr& q, const Field& f, int degree, std::size_t dmax);
/// Leavitt target with the same signature.
KReport k_leavitt(const QuiverPtr& q, const Field& f, int degree);

}  // namespace lpa
