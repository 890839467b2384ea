#pragma once

// Congruences of finite algebras with total operations (join, imp and the
// ternary r or q) and the congruence properties guaranteed by the Maltsev
// and Jonsson terms built from r and imp.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

/// An equivalence relation on the universe. Each element maps to the
/// smallest element of its class, so equal partitions compare equal.
class Partition {
 public:
  explicit Partition(std::vector<elem_t> class_of);

  static Partition identity(std::size_t n);
  static Partition full(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  elem_t      representative(elem_t x) const { return class_of_[x]; }
  bool        related(elem_t x, elem_t y) const {
    return class_of_[x] == class_of_[y];
  }
  std::size_t                      number_of_classes() const;
  std::vector<std::vector<elem_t>> blocks() const;
  std::vector<elem_t> const&       class_of() const noexcept { return class_of_; }

  /// True iff every class of *this lies inside a class of other.
  bool refines(Partition const& other) const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend auto operator<=>(Partition const&, Partition const&) = default;

 private:
  std::vector<elem_t> class_of_;
};

Partition partition_meet(Partition const& a, Partition const& b);
Partition partition_join(Partition const& a, Partition const& b);

/// Block notation in element order, e.g. {0,a}{b}{c,1}.
std::string to_string(Algebra const& alg, Partition const& p);

/// Throws PreconditionError when the algebra carries a partial table
/// (meet or prod) or its imp, r or q table has undefined entries.
void require_total(Algebra const& alg);

/// The smallest congruence relating a and b.
Partition principal_congruence(Algebra const& alg, elem_t a, elem_t b);

struct ConLattice {
  // Ordered by decreasing number of classes, then by class_of; the
  // identity comes first and the full relation last.
  std::vector<Partition>         congruences;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: congruence i refines j

  std::size_t size() const noexcept { return congruences.size(); }
};

ConLattice congruence_lattice(Algebra const& alg);

struct MaltsevReport {
  bool three_permutable = true;
  bool con_distributive = true;
  bool weakly_regular   = true;
  // Indices into the congruence list of the first counterexample found.
  std::optional<std::pair<std::size_t, std::size_t>> permutability_witness;
  std::optional<std::vector<std::size_t>>            distributivity_witness;
  std::optional<std::pair<std::size_t, std::size_t>> regularity_witness;
};

MaltsevReport maltsev_report(Algebra const& alg);
MaltsevReport maltsev_report(ConLattice const& con, elem_t top);

/// Evaluates the term schemes pointwise over all tuples:
///   (a) t1 = r(z, y -> x, x), t2 = r(x, y -> z, z) with t1(x,y,y) = x,
///       t1(x,x,y) = t2(x,y,y), t2(x,x,y) = y            ("maltsev-*")
///   (b) t0 = x, t1 = r(z, y, x), t2 = r(x, y -> z, z), t3 = z with the
///       Jonsson identities for n = 3                    ("jonsson-*")
///   (c) x -> y = 1 and y -> x = 1 exactly when x = y    ("weak-regularity")
/// For an R-algebra q replaces r, and (a) is only evaluated when
/// q(x, x -> y, y) = y holds.
Report term_witness_check(Algebra const& alg);

}  // namespace ordalg
