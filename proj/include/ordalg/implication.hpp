#pragma once

// Non-classical implication semilattices: the implication presentation of a
// sectioned semilattice, its axioms and consequences, and the two maps
// between the presentations.

#include "ordalg/algebra.hpp"
#include "ordalg/sectioned.hpp"

namespace ordalg {

/// x -> y := (x v y)^y, read off the stored pseudocomplements. The result
/// carries the meet and imp tables and is tagged ncis.
Algebra derive_implication(SectionedAlgebra const& s);

/// Convenience overload computing the pseudocomplements first; throws
/// PreconditionError if the input is not sectioned.
Algebra derive_implication(Algebra const& alg);

/// y^x := y -> x on every section. Throws PreconditionError unless
/// validate_ncis passes.
SectionedAlgebra derive_sections(Algebra const& ncis);

/// Axioms (1)-(4) for all x, y, z, after checking that the meet recomputed
/// from the order is defined exactly on bounded pairs ("meet-domain") and
/// that a stored meet table agrees with it ("meet-table").
Report validate_ncis(Algebra const& alg);

/// Consequences (5)-(9).
Report check_ncis_properties(Algebra const& ncis);

}  // namespace ordalg
