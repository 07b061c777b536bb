#pragma once

#include <vector>

#include "lpa/quiver_reps.hpp"

namespace lpa {

/// Every cyclic OverEbar module of total dimension <= dmax, once per
/// spinning normal form (generator at the least vertex of the support).
std::vector<Rep> cyclic_candidates(const QuiverPtr& e, const Field& f, std::size_t dmax);

/// Simplicity flags, one per candidate. The parallel version uses OpenMP and
/// must agree with the serial one.
std::vector<char> simple_filter_serial(const std::vector<Rep>& candidates);
std::vector<char> simple_filter_parallel(const std::vector<Rep>& candidates);

/// Simple OverEbar modules of total dimension <= dmax, one per isomorphism
/// class, ordered by total dimension then discovery order.
/// Throws InfiniteFieldUnsupported over Q.
std::vector<Rep> enumerate_simples(const QuiverPtr& e, const Field& f, std::size_t dmax, bool parallel = true);

}  // namespace lpa
