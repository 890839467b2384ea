#include "ordalg/varieties.hpp"

#include "ordalg/implication.hpp"
#include "ordalg/order.hpp"
#include "ordalg/residuated.hpp"

// Witness tuples list the variables in the order x, y, z, u.

namespace ordalg {

namespace {

  Report check_total_ops(Algebra const& alg, bool want_r) {
    if (Report r = validate_join_semilattice(alg); !r) {
      return r;
    }
    std::size_t const n = alg.size();
    if (!alg.imp_table()) {
      return Report::fail("imp", {}, "-", "-", "missing imp table");
    }
    for (elem_t v : alg.imp_table()->values()) {
      if (v >= n) {
        return Report::fail("imp", {}, "-", "-", "imp table must be total");
      }
    }
    auto const& tern = want_r ? alg.r_table() : alg.q_table();
    char const* name = want_r ? "r" : "q";
    if (!tern) {
      return Report::fail(name, {}, "-", "-",
                          std::string("missing ") + name + " table");
    }
    for (elem_t v : tern->values()) {
      if (v >= n) {
        return Report::fail(name, {}, "-", "-",
                            std::string(name) + " table entry is not an element");
      }
    }
    return Report::pass();
  }

  // Reads a binary partial operation off a ternary one at common lower
  // bounds, checking that the choice of lower bound does not matter.
  template <typename Ternary>
  BinTable read_off(Algebra const& alg, Ternary const& t, char const* what) {
    std::size_t const n = alg.size();
    BinTable          out(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const lower = common_lower_bounds(alg, x, y);
        if (lower.empty()) continue;
        elem_t const first = t(x, y, lower.front());
        for (elem_t z : lower) {
          if (t(x, y, z) != first) {
            throw NotWellDefinedError(std::string(what) + " not well-defined",
                                      {elem_t(x), elem_t(y), lower.front(), z});
          }
        }
        out.set(x, y, first);
      }
    }
    return out;
  }

}  // namespace

Algebra ialgebra_from_ncis(Algebra const& ncis) {
  Report const rep = validate_ncis(ncis);
  if (!rep) {
    throw PreconditionError("ialgebra_from_ncis: not an NCIS: "
                            + fail_line(ncis, rep));
  }
  std::size_t const n    = ncis.size();
  BinTable const    meet = meet_table_from_order(ncis);
  TernTable         r(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        r.set(x, y, z, meet(ncis.join(x, z), ncis.join(y, z)));
      }
    }
  }
  return ncis.with_meet(std::nullopt)
      .with_prod(std::nullopt)
      .with_r(std::move(r))
      .with_class(ClassTag::ialg);
}

Algebra ncis_from_ialgebra(Algebra const& ialg) {
  if (!ialg.r_table() || !ialg.imp_table()) {
    throw PreconditionError("ncis_from_ialgebra: missing r or imp table");
  }
  BinTable meet = read_off(
      ialg, [&](elem_t x, elem_t y, elem_t z) { return ialg.r(x, y, z); }, "r");
  return ialg.with_r(std::nullopt)
      .with_meet(std::move(meet))
      .with_class(ClassTag::ncis);
}

Report validate_ialgebra(Algebra const& alg) {
  if (Report rep = check_total_ops(alg, true); !rep) {
    return rep;
  }
  std::size_t const n = alg.size();
  auto const        L = [&](elem_t e) { return alg.label(e); };
  auto const        J = [&](elem_t x, elem_t y) { return alg.join(x, y); };
  auto const        I = [&](elem_t x, elem_t y) { return alg.imp(x, y); };
  auto const        R = [&](elem_t x, elem_t y, elem_t z) {
    return alg.r(x, y, z);
  };
  auto const le = [&](elem_t x, elem_t y) { return alg.leq(x, y); };

  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      if (!le(y, I(x, y))) {
        return Report::fail("(1')", {x, y}, L(y), L(I(x, y)));
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      elem_t const lhs = R(x, I(x, y), y);
      if (lhs != y) {
        return Report::fail("(2')", {x, y}, L(lhs), L(y));
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      if (I(J(x, y), y) != I(x, y)) {
        return Report::fail("(3')", {x, y}, L(I(J(x, y), y)), L(I(x, y)));
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        elem_t const rhs = I(J(x, z), R(x, y, z));
        if (!le(y, rhs)) {
          return Report::fail("(4')", {x, y, z}, L(y), L(rhs));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        if (!le(R(x, y, z), J(x, z))) {
          return Report::fail("(5')", {x, y, z}, L(R(x, y, z)), L(J(x, z)));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        if (!le(R(x, y, z), J(y, z))) {
          return Report::fail("(6')", {x, y, z}, L(R(x, y, z)), L(J(y, z)));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        elem_t const lhs = R(x, J(x, y), z);
        if (lhs != J(x, z)) {
          return Report::fail("(7')", {x, y, z}, L(lhs), L(J(x, z)));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        elem_t const rhs = R(J(x, z), J(y, z), z);
        if (R(x, y, z) != rhs) {
          return Report::fail("(8')", {x, y, z}, L(R(x, y, z)), L(rhs));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        if (!le(z, R(x, y, z))) {
          return Report::fail("(9')", {x, y, z}, L(z), L(R(x, y, z)));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      for (elem_t z = 0; z < n; ++z) {
        for (elem_t u = 0; u < n; ++u) {
          elem_t const lhs = R(u, R(x, y, z), z);
          elem_t const rhs = R(R(u, x, z), R(u, y, z), z);
          if (lhs != rhs) {
            return Report::fail("(10')", {x, y, z, u}, L(lhs), L(rhs));
          }
        }
      }
    }
  }
  return Report::pass();
}

Report check_ialgebra_derived(Algebra const& alg) {
  std::size_t const n = alg.size();
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      if (alg.r(x, x, y) != alg.join(x, y)) {
        return Report::fail("r(x,x,y)", {x, y}, alg.label(alg.r(x, x, y)),
                            alg.label(alg.join(x, y)));
      }
      if (alg.r(y, y, x) != alg.join(x, y)) {
        return Report::fail("r(y,y,x)", {x, y}, alg.label(alg.r(y, y, x)),
                            alg.label(alg.join(x, y)));
      }
    }
  }
  return Report::pass();
}

Algebra ralgebra_from_rrs(Algebra const& rrs) {
  Report const rep = validate_rrs(rrs);
  if (!rep) {
    throw PreconditionError("ralgebra_from_rrs: not an RRS: "
                            + fail_line(rrs, rep));
  }
  std::size_t const n = rrs.size();
  TernTable         q(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        q.set(x, y, z, rrs.prod(rrs.join(x, z), rrs.join(y, z)));
      }
    }
  }
  return rrs.with_prod(std::nullopt)
      .with_meet(std::nullopt)
      .with_q(std::move(q))
      .with_class(ClassTag::ralg);
}

Algebra rrs_from_ralgebra(Algebra const& ralg) {
  if (!ralg.q_table() || !ralg.imp_table()) {
    throw PreconditionError("rrs_from_ralgebra: missing q or imp table");
  }
  BinTable prod = read_off(
      ralg, [&](elem_t x, elem_t y, elem_t z) { return ralg.q(x, y, z); }, "q");
  return ralg.with_q(std::nullopt)
      .with_prod(std::move(prod))
      .with_class(ClassTag::rrs);
}

Report validate_ralgebra(Algebra const& alg, bool subvariety) {
  if (Report rep = check_total_ops(alg, false); !rep) {
    return rep;
  }
  std::size_t const n   = alg.size();
  elem_t const      top = alg.top();
  auto const        L   = [&](elem_t e) { return alg.label(e); };
  auto const        J   = [&](elem_t x, elem_t y) { return alg.join(x, y); };
  auto const        I   = [&](elem_t x, elem_t y) { return alg.imp(x, y); };
  auto const        Q   = [&](elem_t x, elem_t y, elem_t z) {
    return alg.q(x, y, z);
  };
  auto const le = [&](elem_t x, elem_t y) { return alg.leq(x, y); };

  // (20) z <= q(x, y, z)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z)
        if (!le(z, Q(x, y, z)))
          return Report::fail("(20)", {x, y, z}, L(z), L(Q(x, y, z)));
  // (21) q(z v u v x, z v u v y, z) = q(z v u v x, z v u v y, z v u)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z)
        for (elem_t u = 0; u < n; ++u) {
          elem_t const zu  = J(z, u);
          elem_t const a   = J(zu, x);
          elem_t const b   = J(zu, y);
          elem_t const lhs = Q(a, b, z);
          elem_t const rhs = Q(a, b, zu);
          if (lhs != rhs)
            return Report::fail("(21)", {x, y, z, u}, L(lhs), L(rhs));
        }
  // (22) q(x, 1, x) = q(1, x, x) = x
  for (elem_t x = 0; x < n; ++x) {
    if (Q(x, top, x) != x)
      return Report::fail("(22)", {x}, L(Q(x, top, x)), L(x));
    if (Q(top, x, x) != x)
      return Report::fail("(22)", {x}, L(Q(top, x, x)), L(x));
  }
  // (23) q(x, y, z) = q(y, x, z)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z)
        if (Q(x, y, z) != Q(y, x, z))
          return Report::fail("(23)", {x, y, z}, L(Q(x, y, z)), L(Q(y, x, z)));
  // (24) q(q(x, y, u), z, u) = q(x, q(y, z, u), u)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z)
        for (elem_t u = 0; u < n; ++u) {
          elem_t const lhs = Q(Q(x, y, u), z, u);
          elem_t const rhs = Q(x, Q(y, z, u), u);
          if (lhs != rhs)
            return Report::fail("(24)", {x, y, z, u}, L(lhs), L(rhs));
        }
  // (25) q(x, z, u) <= q(x v y, z, u)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z)
        for (elem_t u = 0; u < n; ++u)
          if (!le(Q(x, z, u), Q(J(x, y), z, u)))
            return Report::fail("(25)", {x, y, z, u}, L(Q(x, z, u)),
                                L(Q(J(x, y), z, u)));
  // (26) x v z <= y -> (q(x, y, z) v z)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z) {
        elem_t const rhs = I(y, J(Q(x, y, z), z));
        if (!le(J(x, z), rhs))
          return Report::fail("(26)", {x, y, z}, L(J(x, z)), L(rhs));
      }
  // (27) x <= y -> x
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      if (!le(x, I(y, x)))
        return Report::fail("(27)", {x, y}, L(x), L(I(y, x)));
  // (28) q(x, x -> y, y) <= y
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      if (!le(Q(x, I(x, y), y), y))
        return Report::fail("(28)", {x, y}, L(Q(x, I(x, y), y)), L(y));
  // (29) q(x, y, z) = q(x v z, y v z, z)
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      for (elem_t z = 0; z < n; ++z) {
        elem_t const rhs = Q(J(x, z), J(y, z), z);
        if (Q(x, y, z) != rhs)
          return Report::fail("(29)", {x, y, z}, L(Q(x, y, z)), L(rhs));
      }
  // (30) (x v y) -> y = x -> y
  for (elem_t x = 0; x < n; ++x)
    for (elem_t y = 0; y < n; ++y)
      if (I(J(x, y), y) != I(x, y))
        return Report::fail("(30)", {x, y}, L(I(J(x, y), y)), L(I(x, y)));
  if (subvariety) {
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y)
        if (Q(x, I(x, y), y) != y)
          return Report::fail("(sub)", {x, y}, L(Q(x, I(x, y), y)), L(y));
  }
  return Report::pass();
}

}  // namespace ordalg
