#pragma once

// Join-semilattices whose sections are pseudocomplemented lattices.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ordalg/algebra.hpp"

namespace ordalg {

/// The greatest z in [base, 1] with y ^ z = base, or nullopt when no
/// greatest such z exists. Throws PreconditionError unless base <= y.
std::optional<elem_t> pseudocomplement_in_section(Algebra const& alg,
                                                  elem_t base, elem_t y);

struct SectionReport {
  elem_t                                  base = 0;
  bool                                    is_lattice = false;
  std::map<elem_t, elem_t>                pseudocomplements;
  std::optional<std::pair<elem_t, elem_t>> failure_witness;
};

/// Lattice test and pseudocomplements of one section. The failure witness
/// is the first pair without a meet, or (base, y) for the first y without
/// a pseudocomplement.
SectionReport section_report(Algebra const& alg, elem_t base);

/// A sectioned semilattice with its family of pseudocomplementations stored
/// explicitly: pseudocomplements(x, y) = y^x for x <= y, UNDEF elsewhere.
struct SectionedAlgebra {
  Algebra  alg;
  BinTable pseudocomplements;

  friend bool operator==(SectionedAlgebra const&,
                         SectionedAlgebra const&) = default;
};

/// Attaches the meet table and the (unique) pseudocomplements; throws
/// PreconditionError if validate_sectioned fails.
SectionedAlgebra make_sectioned(Algebra const& alg);

/// (a) every bounded pair has a greatest common lower bound, (b) every y in
/// every section [x, 1] has a pseudocomplement there.
Report validate_sectioned(Algebra const& alg);

/// As above, and additionally the stored pseudocomplements must be the
/// actual ones ("pc" failure otherwise).
Report validate_sectioned(SectionedAlgebra const& s);

struct SectionShape {
  bool distributive = true;
  bool modular      = true;
  // (o, x, y, z, i) with o < x < y < i, o < z < i for a pentagon; the
  // bottom, three atoms and top for a diamond.
  std::optional<std::array<elem_t, 5>> witness;
  std::string                          witness_kind;  // "N5", "M3" or empty
};

/// Distributivity and modularity of [base, 1] as a lattice, with the first
/// pentagon (preferred) or diamond sublattice found in scan order. Throws
/// PreconditionError when the section is not a lattice.
SectionShape section_shape_report(Algebra const& alg, elem_t base);

}  // namespace ordalg
