#pragma once

#include <vector>

#include "cdelab/poly.hpp"

namespace cdelab {

// Squarefree part f / gcd(f, f'), monic.
Poly squarefree_part(const Poly& f);

// Distinct roots of f lying in Q(zeta_n), sorted by compare(). Candidates
// are located numerically in every complex embedding and then verified
// exactly, so every returned value is a root. A root is missed only if its
// coordinates have denominators too large to recognize from long double
// approximations.
std::vector<Cyclo> roots_in_field(const Poly& f, int order);

}  // namespace cdelab
