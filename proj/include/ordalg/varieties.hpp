#pragma once

// Total-operation presentations. An I-algebra replaces the partial meet by
// r(x, y, z) = (x v z) ^ (y v z); an R-algebra replaces the partial product
// by q(x, y, z) = (x v z) . (y v z). Both classes are varieties.

#include "ordalg/algebra.hpp"

namespace ordalg {

/// r[x][y][z] := (x v z) ^ (y v z). Drops the meet table; tagged ialg.
/// Throws PreconditionError unless validate_ncis passes.
Algebra ialgebra_from_ncis(Algebra const& ncis);

/// x ^ y := r(x, y, z) for any common lower bound z. Throws
/// NotWellDefinedError("r not well-defined", {x, y, z, z'}) when two lower
/// bounds give different values. Drops r; tagged ncis.
Algebra ncis_from_ialgebra(Algebra const& ialg);

/// Identities (1')-(10') over all tuples.
Report validate_ialgebra(Algebra const& alg);

/// r(x, x, y) = x v y = r(y, y, x), a consequence of (1')-(10').
Report check_ialgebra_derived(Algebra const& alg);

/// q[x][y][z] := (x v z) . (y v z). Drops prod; tagged ralg. Throws
/// PreconditionError unless validate_rrs passes.
Algebra ralgebra_from_rrs(Algebra const& rrs);

/// x . y := q(x, y, z) for any common lower bound z; throws
/// NotWellDefinedError("q not well-defined", ...) otherwise. Tagged rrs.
Algebra rrs_from_ralgebra(Algebra const& ralg);

/// Identities (20)-(30); with `subvariety` also q(x, x -> y, y) = y,
/// reported as "(sub)".
Report validate_ralgebra(Algebra const& alg, bool subvariety = false);

}  // namespace ordalg
