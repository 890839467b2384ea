#pragma once

// Dispatch from a class tag to its validator, and conversions between the
// presentations used by the property suites.

#include "ordalg/algebra.hpp"

namespace ordalg {

/// Runs the validator of `tag` on `alg`. For ralg, `subvariety` adds the
/// identity q(x, x -> y, y) = y.
Report validate_class(Algebra const& alg, ClassTag tag, bool subvariety = false);

/// The stored tag, or a guess from the tables present when the file has no
/// class line: r -> ialg, q -> ralg, prod -> rrs, imp -> ncis, otherwise
/// sectioned when the sections are pseudocomplemented lattices, else jsl.
ClassTag infer_class(Algebra const& alg);

/// The NCIS presentation of a model of any class other than jsl. Throws
/// PreconditionError when the model does not convert.
Algebra as_ncis(Algebra const& alg);

/// The RRS presentation (product table) of a model of any class other than
/// jsl.
Algebra as_rrs(Algebra const& alg);

/// A presentation with only total operations: the join alone for jsl, the
/// I-algebra for sectioned and ncis, the R-algebra for srs and rrs.
Algebra as_total(Algebra const& alg);

}  // namespace ordalg
