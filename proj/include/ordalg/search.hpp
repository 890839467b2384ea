#pragma once

// Exhaustive enumeration of small models up to isomorphism, model counting
// and counterexample search.
//
// Join-semilattices with top are grown one minimal element at a time; every
// other class is obtained from them by filtering and by the maps between
// presentations. Representatives are in canonical form: the universe is
// relabelled by the permutation fixing the top that makes the concatenated
// tables (join first) lexicographically least, and models are emitted in
// increasing order of that key.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

/// Largest size enumerated without an explicit override.
inline constexpr std::size_t kDefaultMaxSize = 8;

class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// kDefaultMaxSize, or the value of the ORDALG_MAX_SIZE environment variable
/// when it is set to a positive integer.
std::size_t size_cap();

struct SearchSpec {
  ClassTag                   class_tag = ClassTag::jsl;
  std::size_t                size      = 1;
  bool                       upto      = false;  // sizes 1..size
  std::optional<std::string> violate;            // a property name
  std::optional<std::size_t> limit;              // max results
  // Also enumerate implication tables that are not read off the sections
  // (ncis, ialg, rrs, srs, ralg).
  bool free_imp = false;
  // Overrides size_cap(); the caller is expected to warn about the cost.
  std::optional<std::size_t> max_size;
  // 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

/// Canonical relabelling: the top moves to the last position and the
/// labels travel with their elements.
Algebra canonical_form(Algebra const& alg);

/// The tables of canonical_form(alg) concatenated (join, meet, imp, prod,
/// r, q, each preceded by a presence marker). Two algebras are isomorphic
/// exactly when their keys are equal.
std::vector<elem_t> canonical_key(Algebra const& alg);

bool isomorphic(Algebra const& a, Algebra const& b);

/// Join-semilattices with top of size n in canonical order, labelled
/// a, b, c, ... with the top labelled 1.
std::vector<Algebra> enumerate_jsl(std::size_t n, unsigned threads = 0);

/// One representative per isomorphism class, each passing its class
/// validator, in canonical order (by size first when spec.upto). Throws
/// SizeCapError beyond the cap.
std::vector<Algebra> enumerate_models(SearchSpec const& spec);

std::size_t count_models(SearchSpec const& spec);

/// Names accepted by check_property and SearchSpec::violate.
std::vector<std::string> const& property_names();

/// Evaluates a named property on a model of any class, converting between
/// presentations as needed. Throws Error for an unknown name and
/// PreconditionError when the property does not apply to the class.
Report check_property(Algebra const& alg, std::string_view property);

/// The first model in enumeration order violating spec.violate, together
/// with the failing report.
struct Counterexample {
  Algebra model;
  Report  report;
};
std::optional<Counterexample> find_counterexample(SearchSpec const& spec);

/// Visits models of the RRS signature satisfying the semilattice laws, the
/// domain and lower-bound conditions on the product, (11)-(14) and (16),
/// but not necessarily (15). Per semilattice the implication tables are
/// enumerated exhaustively when there are at most `exhaustive_limit` of
/// them, and otherwise sampled as every single- and double-cell change of
/// two base tables: the residual of the product (when it exists) and the
/// table x -> y = 1 for x <= y, y otherwise. Returns the number visited.
std::size_t for_each_rrs_precandidate(
    std::size_t n, std::function<void(Algebra const&)> const& visit,
    std::size_t exhaustive_limit = std::size_t(1) << 20);

}  // namespace ordalg
