#include "ordalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ordalg {

namespace {
  constexpr std::array<std::pair<ClassTag, std::string_view>, 7> kTagNames{{
      {ClassTag::jsl, "jsl"},
      {ClassTag::sectioned, "sectioned"},
      {ClassTag::ncis, "ncis"},
      {ClassTag::srs, "srs"},
      {ClassTag::rrs, "rrs"},
      {ClassTag::ialg, "ialg"},
      {ClassTag::ralg, "ralg"},
  }};
}  // namespace

std::string_view to_string(ClassTag tag) {
  for (auto const& [t, name] : kTagNames) {
    if (t == tag) {
      return name;
    }
  }
  return "none";
}

std::optional<ClassTag> parse_class_tag(std::string_view text) {
  for (auto const& [t, name] : kTagNames) {
    if (name == text) {
      return t;
    }
  }
  return std::nullopt;
}

bool BinTable::is_total() const {
  return std::none_of(
      values_.begin(), values_.end(), [](elem_t v) { return v == UNDEF; });
}

Algebra::Algebra(Universe universe, BinTable join)
    : universe_(std::move(universe)), join_(std::move(join)) {
  std::size_t const n = universe_.size();
  if (n == 0 || n > kMaxElements) {
    throw Error("an algebra needs between 1 and 254 elements");
  }
  if (join_.size() != n) {
    throw Error("join table size does not match the universe");
  }
  leq_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq_[x * n + y] = join_(x, y) == y ? 1 : 0;
    }
  }
}

Algebra Algebra::with_name(std::string name) const {
  Algebra copy = *this;
  copy.name_   = std::move(name);
  return copy;
}

Algebra Algebra::with_class(ClassTag tag) const {
  Algebra copy    = *this;
  copy.class_tag_ = tag;
  return copy;
}

Algebra Algebra::with_meet(std::optional<BinTable> table) const {
  Algebra copy = *this;
  copy.meet_   = std::move(table);
  return copy;
}

Algebra Algebra::with_imp(std::optional<BinTable> table) const {
  Algebra copy = *this;
  copy.imp_    = std::move(table);
  return copy;
}

Algebra Algebra::with_prod(std::optional<BinTable> table) const {
  Algebra copy = *this;
  copy.prod_   = std::move(table);
  return copy;
}

Algebra Algebra::with_r(std::optional<TernTable> table) const {
  Algebra copy = *this;
  copy.r_      = std::move(table);
  return copy;
}

Algebra Algebra::with_q(std::optional<TernTable> table) const {
  Algebra copy = *this;
  copy.q_      = std::move(table);
  return copy;
}

Algebra Algebra::bare() const {
  return Algebra(universe_, join_);
}

Report Report::fail(std::string axiom, std::vector<elem_t> witness,
                    std::string lhs, std::string rhs, std::string detail) {
  Report r;
  r.ok      = false;
  r.axiom   = std::move(axiom);
  r.witness = std::move(witness);
  r.lhs     = std::move(lhs);
  r.rhs     = std::move(rhs);
  r.detail  = std::move(detail);
  return r;
}

std::string label_or_undef(Algebra const& alg, elem_t x) {
  return x == UNDEF ? std::string("-") : alg.label(x);
}

std::string format_witness(Algebra const& alg, std::span<elem_t const> witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += label_or_undef(alg, witness[i]);
  }
  out += ')';
  return out;
}

std::string fail_line(Algebra const& alg, Report const& report) {
  return "FAIL axiom=" + report.axiom
         + " witness=" + format_witness(alg, report.witness)
         + " lhs=" + (report.lhs.empty() ? "-" : report.lhs)
         + " rhs=" + (report.rhs.empty() ? "-" : report.rhs);
}

}  // namespace ordalg
