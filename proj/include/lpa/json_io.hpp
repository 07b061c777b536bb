#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/integer_matrix.hpp"
#include "lpa/ktheory.hpp"
#include "lpa/path_algebra.hpp"
#include "lpa/quiver_reps.hpp"
#include "lpa/blanchfield.hpp"
#include "lpa/weak_algorithm.hpp"

namespace lpa::io {

using Json = nlohmann::ordered_json;

/// Reads a file; throws MalformedInput when missing or not JSON.
Json read_file(const std::string& path);

QuiverPtr quiver_from_json(const Json& j);
Json to_json(const Quiver& q);

Scalar scalar_from_json(const Field& f, const Json& j);

/// {"terms":[{"path":{"base":"v1","arrows":["e"]},"coeff":"3/2"}]}
AlgebraElement element_from_json(const QuiverPtr& q, const Field& f, const Json& j);
Json to_json(const AlgebraElement& x);

/// Element JSON entries plus row_types / col_types.
AlgebraMatrix algebra_matrix_from_json(const QuiverPtr& q, const Field& f, const Json& j);
Json to_json(const AlgebraMatrix& m);

/// {"side":"Ebar","dims":{"v1":2},"maps":{"e":[["1","0"],["0","1"]]}}; maps keyed by arrows of E.
Rep rep_from_json(const QuiverPtr& e, const Field& f, const Json& j);
Json to_json(const Rep& r);

Json to_json(const Matrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<Scalar>& v);
Json to_json(const FGAbelianGroup& g);
Json to_json(const UnitCoker& u);
Json to_json(const BlaSummary& s);
Json to_json(const KReport& r);
Json to_json(const TorsionReport& t);
Json to_json(const std::vector<FactorCount>& fs);

/// {"basis":[{"label":"b1","vertex":"v1","mu":1}]}
FilteredFreeModule module_from_json(const QuiverPtr& q, const Field& f, const Json& j);
/// {"b1": element, ...}
ModuleVector vector_from_json(const FilteredFreeModule& m, const Json& j);
Json to_json(const FilteredFreeModule& m, const ModuleVector& v);

/// Indented key: value rendering of the same data.
std::string to_text(const Json& j);

}  // namespace lpa::io
