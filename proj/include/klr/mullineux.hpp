#pragma once

#include "klr/partition.hpp"

#include <random>
#include <utility>

namespace klr {

/// Empties mu along e~ using the smallest residue with positive epsilon at
/// each step, then rebuilds with f~_{-i} in reverse order.
Partition mullineux_crystal(const Arith& a, const Partition& mu);
/// Same, choosing each emptying residue uniformly among those with epsilon > 0.
Partition mullineux_crystal(const Arith& a, const Partition& mu, std::mt19937_64& rng);

/// One deletion step: (J(mu), j(mu)).
std::pair<Partition, int> xu_step(const Arith& a, const Partition& mu);
Partition mullineux_xu(const Arith& a, const Partition& mu);

}  // namespace klr
