#pragma once

// Sectionally and relatively residuated join-semilattices, their
// identity-based characterization, the conversions between the two, and the
// bridge to non-classical implication semilattices.

#include <optional>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

/// Everything an RRS needs except relative adjointness (15): the
/// semilattice laws (10), prod defined exactly on bounded pairs
/// ("domain"), above every common lower bound ("lower-bound"), and
/// (11)-(14), (16).
Report validate_rrs_preconditions(Algebra const& alg);

/// (15) alone, as a bi-implication over all triples: "(15a)" when the
/// product is below z but x v z is not below y -> z, "(15b)" for the
/// converse.
Report check_relative_adjointness(Algebra const& alg);

/// The full axiom system: preconditions then (15).
Report validate_rrs(Algebra const& alg);

struct IdentityVerdict {
  Report identities;   // (17)-(19)
  Report adjointness;  // (15)
  bool   agrees() const noexcept { return identities.ok == adjointness.ok; }
};

/// Evaluates (17)-(19) and (15) side by side; on an algebra satisfying
/// validate_rrs_preconditions the two verdicts must agree.
IdentityVerdict validate_rrs_identities(Algebra const& alg);

/// (x v y) . (x -> y) = y
Report check_divisible(Algebra const& rrs);

/// The eight consequences (i)-(viii) of the RRS axioms. Inequalities
/// involving a product are checked where the product is defined.
Report check_rrs_properties(Algebra const& rrs);

/// One commutative monoid per section: section_products[x](u, v) for u, v
/// in [x, 1], UNDEF elsewhere.
struct SrsAlgebra {
  Algebra               alg;
  std::vector<BinTable> section_products;

  friend bool operator==(SrsAlgebra const&, SrsAlgebra const&) = default;
};

/// Restricts the prod table to every section without checking anything.
/// This is how an SRS is read from a file.
SrsAlgebra srs_from_table(Algebra const& alg);

/// Restriction of a validated RRS; throws PreconditionError otherwise.
SrsAlgebra srs_from_rrs(Algebra const& rrs);

/// x . y := x ._z y for any common lower bound z. Throws
/// NotWellDefinedError("incompatible section family", {x, y, z, z'}) when
/// two lower bounds disagree.
Algebra rrs_from_srs(SrsAlgebra const& srs);

/// Monoid laws per section, then compatibility (i), monotonicity (ii),
/// sectional adjointness (iii) and (iv).
Report validate_srs(SrsAlgebra const& srs);

enum class BridgeDirection { to_rrs, to_ncis };

struct BridgeResult {
  Report                 report;
  std::optional<Algebra> algebra;
  // Whether every bounded pair has a greatest lower bound; the alternative
  // to idempotence of the product.
  bool meet_on_bounded_pairs = false;
};

/// to_rrs: an NCIS with . := ^ is a divisible RRS with idempotent product
/// satisfying y <= (x v z) -> ((x v z) . (y v z)). to_ncis: the converse,
/// checking x . x = x ("idempotence") and that identity ("bridge-identity")
/// first, then the RRS axioms, divisibility and that the product is the
/// infimum.
BridgeResult ncis_rrs_bridge(Algebra const& alg, BridgeDirection direction);

}  // namespace ordalg
