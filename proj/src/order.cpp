#include "ordalg/order.hpp"

namespace ordalg {

MeetNotUniqueError::MeetNotUniqueError(elem_t x, elem_t y)
    : Error("meet not unique"), x_(x), y_(y) {}

std::vector<elem_t> common_lower_bounds(Algebra const& alg, elem_t x, elem_t y) {
  std::vector<elem_t> out;
  for (std::size_t z = 0; z < alg.size(); ++z) {
    if (alg.leq(z, x) && alg.leq(z, y)) {
      out.push_back(static_cast<elem_t>(z));
    }
  }
  return out;
}

bool bounded(Algebra const& alg, elem_t x, elem_t y) {
  for (std::size_t z = 0; z < alg.size(); ++z) {
    if (alg.leq(z, x) && alg.leq(z, y)) {
      return true;
    }
  }
  return false;
}

bool bounded(Algebra const& alg, elem_t x, elem_t y, elem_t w) {
  for (std::size_t z = 0; z < alg.size(); ++z) {
    if (alg.leq(z, x) && alg.leq(z, y) && alg.leq(z, w)) {
      return true;
    }
  }
  return false;
}

std::optional<elem_t> infimum(Algebra const& alg, elem_t x, elem_t y) {
  auto const lower = common_lower_bounds(alg, x, y);
  for (elem_t candidate : lower) {
    bool greatest = true;
    for (elem_t z : lower) {
      if (!alg.leq(z, candidate)) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      return candidate;
    }
  }
  return std::nullopt;
}

elem_t partial_meet(Algebra const& alg, elem_t x, elem_t y) {
  if (!bounded(alg, x, y)) {
    return UNDEF;
  }
  auto const m = infimum(alg, x, y);
  if (!m) {
    throw MeetNotUniqueError(x, y);
  }
  return *m;
}

BinTable meet_table_from_order(Algebra const& alg) {
  std::size_t const n = alg.size();
  BinTable          meet(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      meet.set(x, y, partial_meet(alg, x, y));
    }
  }
  return meet;
}

std::vector<elem_t> section(Algebra const& alg, elem_t x) {
  std::vector<elem_t> out;
  for (std::size_t y = 0; y < alg.size(); ++y) {
    if (alg.leq(x, y)) {
      out.push_back(static_cast<elem_t>(y));
    }
  }
  return out;
}

Report validate_join_semilattice(Algebra const& alg) {
  std::size_t const n = alg.size();
  auto const        L = [&](elem_t e) { return label_or_undef(alg, e); };
  auto const        valid = [&](elem_t e) { return e < n; };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!valid(alg.join(x, y))) {
        return Report::fail("total", {elem_t(x), elem_t(y)},
                            L(alg.join(x, y)), "element",
                            "join table entry is not an element");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (alg.join(x, x) != x) {
      return Report::fail("idempotence", {elem_t(x)}, L(alg.join(x, x)),
                          L(x));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (alg.join(x, y) != alg.join(y, x)) {
        return Report::fail("commutativity", {elem_t(x), elem_t(y)},
                            L(alg.join(x, y)), L(alg.join(y, x)));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        elem_t const lhs = alg.join(x, alg.join(y, z));
        elem_t const rhs = alg.join(alg.join(x, y), z);
        if (lhs != rhs) {
          return Report::fail("associativity",
                              {elem_t(x), elem_t(y), elem_t(z)}, L(lhs),
                              L(rhs));
        }
      }
    }
  }
  // With the three laws above the induced order is a partial order and the
  // join is its supremum; checked here against the stored order anyway.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const s = alg.join(x, y);
      if (!alg.leq(x, s) || !alg.leq(y, s)) {
        return Report::fail("order-consistency", {elem_t(x), elem_t(y)}, L(s),
                            "upper bound");
      }
      for (std::size_t u = 0; u < n; ++u) {
        if (alg.leq(x, u) && alg.leq(y, u) && !alg.leq(s, u)) {
          return Report::fail("order-consistency",
                              {elem_t(x), elem_t(y), elem_t(u)}, L(s), L(u),
                              "join is not below an upper bound");
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (alg.join(x, alg.top()) != alg.top()) {
      return Report::fail("top", {elem_t(x)}, L(alg.join(x, alg.top())),
                          L(alg.top()));
    }
  }
  return Report::pass();
}

}  // namespace ordalg
