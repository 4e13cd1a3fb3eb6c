#pragma once

#include "exaro/tree.hpp"

#include <vector>

namespace exaro {

/// All compositions with |kappa| + |kappa'| + 1 = 2n, sorted lexicographically.
std::vector<Composition> compositions_of_order(int n);

/// 2|gamma| = |kappa| + |kappa'| + 1 has a solution iff the right side is even.
bool parity_ok(const Composition& kappa);

/// One canonical representative per isomorphism class with this composition,
/// sorted by canonical encoding. Empty (parity obstruction) when |kappa| +
/// |kappa'| + 1 is odd.
std::vector<Tree> enumerate_by_composition(const Composition& kappa);

std::vector<Tree> enumerate_by_order(int n);

/// All trees with |kappa| = m and order <= max_order. The order bound is
/// required: the set of trees on m nodes alone is infinite.
std::vector<Tree> enumerate_by_nodes(int m, int max_order);

/// The fixed target map used by the enumeration: vertices listed in
/// non-increasing in-degree, arrows assigned consecutively per vertex.
std::vector<int> canonical_tau(const Composition& kappa);

} // namespace exaro
