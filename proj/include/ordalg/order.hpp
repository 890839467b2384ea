#pragma once

// Order-theoretic primitives on a join-semilattice with top: the order read
// off the join table, sections (principal filters), common lower bounds and
// the genuine partial meet.

#include <optional>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

class MeetNotUniqueError : public Error {
 public:
  MeetNotUniqueError(elem_t x, elem_t y);
  elem_t x() const noexcept { return x_; }
  elem_t y() const noexcept { return y_; }

 private:
  elem_t x_;
  elem_t y_;
};

inline bool leq(Algebra const& alg, elem_t x, elem_t y) {
  return alg.join(x, y) == y;
}

inline elem_t join(Algebra const& alg, elem_t x, elem_t y) {
  return alg.join(x, y);
}

/// { z : z <= x and z <= y } in index order.
std::vector<elem_t> common_lower_bounds(Algebra const& alg, elem_t x, elem_t y);

/// True iff x and y have a common lower bound.
bool bounded(Algebra const& alg, elem_t x, elem_t y);

/// True iff x, y and z have a common lower bound.
bool bounded(Algebra const& alg, elem_t x, elem_t y, elem_t z);

/// The greatest common lower bound, or nullopt when there is none (either
/// no lower bound at all or no greatest one).
std::optional<elem_t> infimum(Algebra const& alg, elem_t x, elem_t y);

/// UNDEF when x and y have no common lower bound, otherwise their greatest
/// common lower bound. Throws MeetNotUniqueError when lower bounds exist but
/// none is greatest.
elem_t partial_meet(Algebra const& alg, elem_t x, elem_t y);

/// The meet table computed from the order; throws MeetNotUniqueError as
/// partial_meet does.
BinTable meet_table_from_order(Algebra const& alg);

/// Section [x, 1] = { y : x <= y } in index order.
std::vector<elem_t> section(Algebra const& alg, elem_t x);

/// Idempotence, commutativity, associativity, order consistency (the join is
/// the least upper bound in the order it induces) and absorption by the top.
/// Witnesses are reported in lexicographic scan order.
Report validate_join_semilattice(Algebra const& alg);

}  // namespace ordalg
