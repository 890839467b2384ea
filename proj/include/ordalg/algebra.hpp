#pragma once

// Core value types: element indices, operation tables, finite algebras and
// validation reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordalg {

using elem_t = std::uint8_t;

/// Marks an undefined entry of a partial table. Serialized as "-".
inline constexpr elem_t UNDEF = 0xFF;

/// Largest universe the table types can index.
inline constexpr std::size_t kMaxElements = 254;

enum class ClassTag { none, jsl, sectioned, ncis, srs, rrs, ialg, ralg };

std::string_view to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(std::string_view text);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its domain (a map applied to
/// an algebra that does not belong to its source class, and similar).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the maps that read a partial operation off a total ternary one
/// when two common lower bounds disagree.
class NotWellDefinedError : public Error {
 public:
  NotWellDefinedError(std::string const& what, std::vector<elem_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  std::vector<elem_t> const& witness() const noexcept { return witness_; }

 private:
  std::vector<elem_t> witness_;
};

/// n x n table; entry (x, y) is op(x, y) or UNDEF.
class BinTable {
 public:
  BinTable() = default;
  explicit BinTable(std::size_t n, elem_t fill = UNDEF)
      : n_(n), values_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  elem_t operator()(elem_t x, elem_t y) const { return values_[x * n_ + y]; }
  void set(elem_t x, elem_t y, elem_t v) { values_[x * n_ + y] = v; }
  bool is_total() const;
  std::span<elem_t const> values() const noexcept { return values_; }

  friend bool operator==(BinTable const&, BinTable const&) = default;

 private:
  std::size_t         n_ = 0;
  std::vector<elem_t> values_;
};

/// n x n x n total table; entry (x, y, z) is op(x, y, z).
class TernTable {
 public:
  TernTable() = default;
  explicit TernTable(std::size_t n, elem_t fill = 0)
      : n_(n), values_(n * n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  elem_t      operator()(elem_t x, elem_t y, elem_t z) const {
    return values_[(z * n_ + x) * n_ + y];
  }
  void set(elem_t x, elem_t y, elem_t z, elem_t v) {
    values_[(z * n_ + x) * n_ + y] = v;
  }
  std::span<elem_t const> values() const noexcept { return values_; }

  friend bool operator==(TernTable const&, TernTable const&) = default;

 private:
  std::size_t         n_ = 0;
  std::vector<elem_t> values_;
};

struct Universe {
  std::vector<std::string> labels;
  elem_t                   top = 0;

  std::size_t size() const noexcept { return labels.size(); }
  friend bool operator==(Universe const&, Universe const&) = default;
};

/// A finite join-semilattice with top together with whichever of the
/// optional operations a class needs. The order is always read off the join
/// table (x <= y iff x v y = y); the constructor does not check the
/// semilattice laws, see validate_join_semilattice.
///
/// Values are immutable: the with_* members return modified copies.
class Algebra {
 public:
  Algebra(Universe universe, BinTable join);

  std::size_t size() const noexcept { return universe_.size(); }
  elem_t      top() const noexcept { return universe_.top; }
  Universe const&                 universe() const noexcept { return universe_; }
  std::vector<std::string> const& labels() const noexcept {
    return universe_.labels;
  }
  std::string const& label(elem_t x) const { return universe_.labels[x]; }
  std::string const& name() const noexcept { return name_; }
  ClassTag           class_tag() const noexcept { return class_tag_; }

  elem_t join(elem_t x, elem_t y) const { return join_(x, y); }
  bool   leq(elem_t x, elem_t y) const { return leq_[x * size() + y] != 0; }

  BinTable const&                 join_table() const noexcept { return join_; }
  std::optional<BinTable> const&  meet_table() const noexcept { return meet_; }
  std::optional<BinTable> const&  imp_table() const noexcept { return imp_; }
  std::optional<BinTable> const&  prod_table() const noexcept { return prod_; }
  std::optional<TernTable> const& r_table() const noexcept { return r_; }
  std::optional<TernTable> const& q_table() const noexcept { return q_; }

  // Unchecked accessors; the table must be present.
  elem_t meet(elem_t x, elem_t y) const { return (*meet_)(x, y); }
  elem_t imp(elem_t x, elem_t y) const { return (*imp_)(x, y); }
  elem_t prod(elem_t x, elem_t y) const { return (*prod_)(x, y); }
  elem_t r(elem_t x, elem_t y, elem_t z) const { return (*r_)(x, y, z); }
  elem_t q(elem_t x, elem_t y, elem_t z) const { return (*q_)(x, y, z); }

  Algebra with_name(std::string name) const;
  Algebra with_class(ClassTag tag) const;
  Algebra with_meet(std::optional<BinTable> table) const;
  Algebra with_imp(std::optional<BinTable> table) const;
  Algebra with_prod(std::optional<BinTable> table) const;
  Algebra with_r(std::optional<TernTable> table) const;
  Algebra with_q(std::optional<TernTable> table) const;

  /// Same carrier and join, no optional operations, no tag.
  Algebra bare() const;

  friend bool operator==(Algebra const&, Algebra const&) = default;

 private:
  Universe                 universe_;
  BinTable                 join_;
  std::vector<std::uint8_t> leq_;
  std::string              name_;
  ClassTag                 class_tag_ = ClassTag::none;
  std::optional<BinTable>  meet_;
  std::optional<BinTable>  imp_;
  std::optional<BinTable>  prod_;
  std::optional<TernTable> r_;
  std::optional<TernTable> q_;
};

/// Outcome of a validator. On failure, `axiom` names the violated law,
/// `witness` is the first offending tuple in scan order and lhs/rhs hold
/// the evaluated sides (element labels, "-" for UNDEF, or true/false for
/// order statements and equivalences).
struct Report {
  bool                ok = true;
  std::string         axiom;
  std::vector<elem_t> witness;
  std::string         lhs;
  std::string         rhs;
  std::string         detail;

  static Report pass() { return {}; }
  static Report fail(std::string axiom, std::vector<elem_t> witness,
                     std::string lhs, std::string rhs,
                     std::string detail = {});

  explicit operator bool() const noexcept { return ok; }
};

/// Label of x, or "-" for UNDEF.
std::string label_or_undef(Algebra const& alg, elem_t x);

/// "(b,a)" style rendering of a witness tuple.
std::string format_witness(Algebra const& alg, std::span<elem_t const> witness);

/// The stable machine-readable line:
/// FAIL axiom=<label> witness=<tuple> lhs=<val> rhs=<val>
std::string fail_line(Algebra const& alg, Report const& report);

}  // namespace ordalg
