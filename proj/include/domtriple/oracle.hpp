#pragma once

#include "domtriple/domination.hpp"

namespace domtriple {

/// Exhaustive reference minimizer. Tries subsets in order of increasing size
/// and returns the first valid one. Shares nothing with the branch-and-bound
/// code, including the set predicates. Throws RangeError above 30 vertices
/// and UndefinedParameter where the variant is undefined.
MinimumSet oracle_min_set(const Graph& g, Variant variant);

/// The triple computed entirely by the oracle.
ParameterTriple oracle_triple(const Graph& g);

}  // namespace domtriple
