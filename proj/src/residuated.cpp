#include "ordalg/residuated.hpp"

#include "ordalg/implication.hpp"
#include "ordalg/order.hpp"

namespace ordalg {

namespace {

  std::string tf(bool b) { return b ? "true" : "false"; }

  Report check_tables(Algebra const& alg) {
    std::size_t const n = alg.size();
    if (!alg.imp_table()) {
      return Report::fail("imp", {}, "-", "-", "missing imp table");
    }
    if (!alg.prod_table()) {
      return Report::fail("prod", {}, "-", "-", "missing prod table");
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (alg.imp(x, y) >= n) {
          return Report::fail("imp", {elem_t(x), elem_t(y)}, "-", "element",
                              "imp table must be total");
        }
        if (alg.prod(x, y) != UNDEF && alg.prod(x, y) >= n) {
          return Report::fail("prod", {elem_t(x), elem_t(y)}, "?", "element",
                              "prod entry is not an element");
        }
      }
    }
    return Report::pass();
  }

}  // namespace

Report validate_rrs_preconditions(Algebra const& alg) {
  if (Report r = validate_join_semilattice(alg); !r) {
    r.axiom = "(10)/" + r.axiom;
    return r;
  }
  if (Report r = check_tables(alg); !r) {
    return r;
  }
  std::size_t const n   = alg.size();
  elem_t const      top = alg.top();
  auto const        L   = [&](elem_t e) { return label_or_undef(alg, e); };
  auto const        P   = [&](elem_t x, elem_t y) { return alg.prod(x, y); };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool const b = bounded(alg, x, y);
      if (b != (P(x, y) != UNDEF)) {
        return Report::fail("domain", {elem_t(x), elem_t(y)}, L(P(x, y)),
                            b ? "defined" : "-",
                            "prod must be defined exactly on bounded pairs");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (elem_t z : common_lower_bounds(alg, x, y)) {
        if (!alg.leq(z, P(x, y))) {
          return Report::fail("lower-bound", {elem_t(x), elem_t(y), z}, L(z),
                              L(P(x, y)),
                              "a common lower bound is not below the product");
        }
      }
    }
  }
  // (11) x . 1 = 1 . x = x
  for (std::size_t x = 0; x < n; ++x) {
    if (P(x, top) != x) {
      return Report::fail("(11)", {elem_t(x)}, L(P(x, top)), L(x));
    }
    if (P(top, x) != x) {
      return Report::fail("(11)", {elem_t(x)}, L(P(top, x)), L(x));
    }
  }
  // (12) commutativity on bounded pairs
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (P(x, y) != UNDEF && P(x, y) != P(y, x)) {
        return Report::fail("(12)", {elem_t(x), elem_t(y)}, L(P(x, y)),
                            L(P(y, x)));
      }
    }
  }
  // (13) associativity on triples with a common lower bound
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!bounded(alg, x, y, z)) continue;
        elem_t const lhs = P(P(x, y), z);
        elem_t const rhs = P(x, P(y, z));
        if (lhs != rhs) {
          return Report::fail("(13)", {elem_t(x), elem_t(y), elem_t(z)},
                              L(lhs), L(rhs));
        }
      }
    }
  }
  // (14) x <= y implies x . z <= y . z whenever x, z are bounded
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!alg.leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (P(x, z) == UNDEF) continue;
        if (!alg.leq(P(x, z), P(y, z))) {
          return Report::fail("(14)", {elem_t(x), elem_t(y), elem_t(z)},
                              L(P(x, z)), L(P(y, z)));
        }
      }
    }
  }
  // (16) (x v y) -> y = x -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const lhs = alg.imp(alg.join(x, y), y);
      if (lhs != alg.imp(x, y)) {
        return Report::fail("(16)", {elem_t(x), elem_t(y)}, L(lhs),
                            L(alg.imp(x, y)));
      }
    }
  }
  return Report::pass();
}

Report check_relative_adjointness(Algebra const& alg) {
  std::size_t const n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        elem_t const a = alg.join(x, z);
        elem_t const p = alg.prod(a, alg.join(y, z));
        bool const   below = p != UNDEF && alg.leq(p, z);
        bool const   resid = alg.leq(a, alg.imp(y, z));
        if (below && !resid) {
          return Report::fail("(15a)", {elem_t(x), elem_t(y), elem_t(z)},
                              tf(below), tf(resid),
                              "product below z but x v z not below y -> z");
        }
        if (!below && resid) {
          return Report::fail("(15b)", {elem_t(x), elem_t(y), elem_t(z)},
                              tf(below), tf(resid),
                              "x v z below y -> z but product not below z");
        }
      }
    }
  }
  return Report::pass();
}

Report validate_rrs(Algebra const& alg) {
  if (Report r = validate_rrs_preconditions(alg); !r) {
    return r;
  }
  return check_relative_adjointness(alg);
}

IdentityVerdict validate_rrs_identities(Algebra const& alg) {
  IdentityVerdict v;
  v.adjointness       = check_relative_adjointness(alg);
  std::size_t const n = alg.size();
  auto const        L = [&](elem_t e) { return label_or_undef(alg, e); };

  v.identities = [&]() -> Report {
    // (17) x v z <= y -> (((x v z) . (y v z)) v z)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          elem_t const a = alg.join(x, z);
          elem_t const p = alg.prod(a, alg.join(y, z));
          if (p == UNDEF) {
            return Report::fail("(17)", {elem_t(x), elem_t(y), elem_t(z)},
                                L(a), "-", "product undefined");
          }
          elem_t const rhs = alg.imp(y, alg.join(p, z));
          if (!alg.leq(a, rhs)) {
            return Report::fail("(17)", {elem_t(x), elem_t(y), elem_t(z)},
                                L(a), L(rhs));
          }
        }
      }
    }
    // (18) x <= y -> x
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!alg.leq(x, alg.imp(y, x))) {
          return Report::fail("(18)", {elem_t(x), elem_t(y)}, L(x),
                              L(alg.imp(y, x)));
        }
      }
    }
    // (19) (x v y) . (x -> y) <= y
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        elem_t const p = alg.prod(alg.join(x, y), alg.imp(x, y));
        if (p == UNDEF || !alg.leq(p, y)) {
          return Report::fail("(19)", {elem_t(x), elem_t(y)}, L(p), L(y));
        }
      }
    }
    return Report::pass();
  }();
  return v;
}

Report check_divisible(Algebra const& alg) {
  std::size_t const n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const p = alg.prod(alg.join(x, y), alg.imp(x, y));
      if (p != y) {
        return Report::fail("divisible", {elem_t(x), elem_t(y)},
                            label_or_undef(alg, p), alg.label(y));
      }
    }
  }
  return Report::pass();
}

Report check_rrs_properties(Algebra const& alg) {
  std::size_t const n   = alg.size();
  elem_t const      top = alg.top();
  auto const        L   = [&](elem_t e) { return label_or_undef(alg, e); };
  auto const        P   = [&](elem_t x, elem_t y) { return alg.prod(x, y); };
  auto const        I   = [&](elem_t x, elem_t y) { return alg.imp(x, y); };
  auto const        le  = [&](elem_t x, elem_t y) {
    return x != UNDEF && y != UNDEF && alg.leq(x, y);
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<elem_t> const w{elem_t(a), elem_t(b)};
      // (i)
      if (alg.leq(a, b) != (I(a, b) == top)) {
        return Report::fail("(i)", w, tf(alg.leq(a, b)), tf(I(a, b) == top));
      }
      // (ii), (iii)
      if (P(a, b) != UNDEF) {
        if (!alg.leq(P(a, b), a)) {
          return Report::fail("(ii)", w, L(P(a, b)), L(a));
        }
        if (auto m = infimum(alg, a, b); m && !alg.leq(P(a, b), *m)) {
          return Report::fail("(iii)", w, L(P(a, b)), L(*m));
        }
      }
      // (iv)
      if (!alg.leq(a, I(b, a))) {
        return Report::fail("(iv)", w, L(a), L(I(b, a)));
      }
      // (v) a . (a -> b) <= (a v b) . (a -> b) <= b
      elem_t const outer = P(alg.join(a, b), I(a, b));
      if (!le(outer, b)) {
        return Report::fail("(v)", w, L(outer), L(b));
      }
      elem_t const inner = P(a, I(a, b));
      if (inner != UNDEF && !alg.leq(inner, outer)) {
        return Report::fail("(v)", w, L(inner), L(outer));
      }
      // (vi)
      if (!alg.leq(a, I(I(a, b), b))) {
        return Report::fail("(vi)", w, L(a), L(I(I(a, b), b)));
      }
      // (viii)
      if (I(I(I(a, b), b), b) != I(a, b)) {
        return Report::fail("(viii)", w, L(I(I(I(a, b), b), b)), L(I(a, b)));
      }
      // (vii)
      if (alg.leq(a, b)) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!alg.leq(I(b, c), I(a, c))) {
            return Report::fail("(vii)", {elem_t(a), elem_t(b), elem_t(c)},
                                L(I(b, c)), L(I(a, c)));
          }
        }
      }
    }
  }
  return Report::pass();
}

SrsAlgebra srs_from_table(Algebra const& alg) {
  if (!alg.prod_table()) {
    throw PreconditionError("srs_from_table: missing prod table");
  }
  std::size_t const     n = alg.size();
  std::vector<BinTable> family(n, BinTable(n));
  for (std::size_t x = 0; x < n; ++x) {
    auto const sec = section(alg, x);
    for (elem_t u : sec) {
      for (elem_t v : sec) {
        family[x].set(u, v, alg.prod(u, v));
      }
    }
  }
  return {alg.with_prod(std::nullopt).with_meet(std::nullopt), std::move(family)};
}

SrsAlgebra srs_from_rrs(Algebra const& rrs) {
  Report const rep = validate_rrs(rrs);
  if (!rep) {
    throw PreconditionError("srs_from_rrs: not an RRS: " + fail_line(rrs, rep));
  }
  SrsAlgebra s = srs_from_table(rrs);
  s.alg        = s.alg.with_class(ClassTag::srs);
  return s;
}

Algebra rrs_from_srs(SrsAlgebra const& srs) {
  Algebra const&    alg = srs.alg;
  std::size_t const n   = alg.size();
  BinTable          prod(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const lower = common_lower_bounds(alg, x, y);
      if (lower.empty()) continue;
      elem_t const first = srs.section_products[lower.front()](x, y);
      for (elem_t z : lower) {
        if (srs.section_products[z](x, y) != first) {
          throw NotWellDefinedError("incompatible section family",
                                    {elem_t(x), elem_t(y), lower.front(), z});
        }
      }
      prod.set(x, y, first);
    }
  }
  return alg.with_prod(std::move(prod)).with_class(ClassTag::rrs);
}

Report validate_srs(SrsAlgebra const& srs) {
  Algebra const& alg = srs.alg;
  if (Report r = validate_join_semilattice(alg); !r) {
    return r;
  }
  if (!alg.imp_table()) {
    return Report::fail("imp", {}, "-", "-", "missing imp table");
  }
  std::size_t const n = alg.size();
  if (srs.section_products.size() != n) {
    return Report::fail("family", {}, "-", "-", "one product table per element");
  }
  auto const   L   = [&](elem_t e) { return label_or_undef(alg, e); };
  elem_t const top = alg.top();

  for (std::size_t x = 0; x < n; ++x) {
    BinTable const& m   = srs.section_products[x];
    auto const      sec = section(alg, x);
    for (elem_t u : sec) {
      for (elem_t v : sec) {
        elem_t const p = m(u, v);
        if (p == UNDEF || p >= n || !alg.leq(x, p)) {
          return Report::fail("monoid-closure", {elem_t(x), u, v}, L(p),
                              "element of the section");
        }
      }
    }
    for (elem_t u : sec) {
      if (m(u, top) != u || m(top, u) != u) {
        return Report::fail("monoid-unit", {elem_t(x), u}, L(m(u, top)), L(u));
      }
      for (elem_t v : sec) {
        if (m(u, v) != m(v, u)) {
          return Report::fail("monoid-comm", {elem_t(x), u, v}, L(m(u, v)),
                              L(m(v, u)));
        }
        for (elem_t w : sec) {
          if (m(m(u, v), w) != m(u, m(v, w))) {
            return Report::fail("monoid-assoc", {elem_t(x), u, v, w},
                                L(m(m(u, v), w)), L(m(u, m(v, w))));
          }
        }
      }
    }
  }
  // (i) z <= u <= x, y implies x ._z y = x ._u y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (elem_t u : common_lower_bounds(alg, x, y)) {
        for (elem_t z : common_lower_bounds(alg, u, u)) {
          elem_t const a = srs.section_products[z](x, y);
          elem_t const b = srs.section_products[u](x, y);
          if (a != b) {
            return Report::fail("(i)", {elem_t(x), elem_t(y), z, u}, L(a), L(b));
          }
        }
      }
    }
  }
  // (ii) u <= x, y, z and x <= y imply x ._u z <= y ._u z
  for (std::size_t u = 0; u < n; ++u) {
    BinTable const& m   = srs.section_products[u];
    auto const      sec = section(alg, u);
    for (elem_t x : sec) {
      for (elem_t y : sec) {
        if (!alg.leq(x, y)) continue;
        for (elem_t z : sec) {
          if (!alg.leq(m(x, z), m(y, z))) {
            return Report::fail("(ii)", {x, y, z, elem_t(u)}, L(m(x, z)),
                                L(m(y, z)));
          }
        }
      }
    }
  }
  // (iii) (x v z) ._z (y v z) <= z iff x v z <= y -> z
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        elem_t const a     = alg.join(x, z);
        elem_t const p     = srs.section_products[z](a, alg.join(y, z));
        bool const   below = alg.leq(p, z);
        bool const   resid = alg.leq(a, alg.imp(y, z));
        if (below != resid) {
          return Report::fail("(iii)", {elem_t(x), elem_t(y), elem_t(z)},
                              tf(below), tf(resid));
        }
      }
    }
  }
  // (iv) (x v y) -> y = x -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const lhs = alg.imp(alg.join(x, y), y);
      if (lhs != alg.imp(x, y)) {
        return Report::fail("(iv)", {elem_t(x), elem_t(y)}, L(lhs),
                            L(alg.imp(x, y)));
      }
    }
  }
  return Report::pass();
}

namespace {

  Report check_idempotent(Algebra const& alg) {
    for (std::size_t x = 0; x < alg.size(); ++x) {
      if (alg.prod(x, x) != x) {
        return Report::fail("idempotence", {elem_t(x)},
                            label_or_undef(alg, alg.prod(x, x)), alg.label(x));
      }
    }
    return Report::pass();
  }

  // y <= (x v z) -> ((x v z) . (y v z))
  Report check_bridge_identity(Algebra const& alg) {
    std::size_t const n = alg.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          elem_t const a = alg.join(x, z);
          elem_t const p = alg.prod(a, alg.join(y, z));
          if (p == UNDEF || !alg.leq(y, alg.imp(a, p))) {
            return Report::fail(
                "bridge-identity", {elem_t(x), elem_t(y), elem_t(z)}, alg.label(y),
                p == UNDEF ? "-" : alg.label(alg.imp(a, p)));
          }
        }
      }
    }
    return Report::pass();
  }

  bool every_bounded_pair_has_meet(Algebra const& alg) {
    for (std::size_t x = 0; x < alg.size(); ++x) {
      for (std::size_t y = 0; y < alg.size(); ++y) {
        if (bounded(alg, x, y) && !infimum(alg, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

BridgeResult ncis_rrs_bridge(Algebra const& alg, BridgeDirection direction) {
  BridgeResult out;
  out.meet_on_bounded_pairs = every_bounded_pair_has_meet(alg);

  if (direction == BridgeDirection::to_rrs) {
    if (Report r = validate_ncis(alg); !r) {
      out.report = r;
      return out;
    }
    Algebra rrs = alg.with_prod(meet_table_from_order(alg))
                      .with_meet(std::nullopt)
                      .with_class(ClassTag::rrs);
    for (auto const& check :
         {validate_rrs(rrs), check_divisible(rrs), check_idempotent(rrs),
          check_bridge_identity(rrs)}) {
      if (!check) {
        out.report = check;
        return out;
      }
    }
    out.report  = Report::pass();
    out.algebra = std::move(rrs);
    return out;
  }

  if (!alg.prod_table() || !alg.imp_table()) {
    out.report = Report::fail("prod", {}, "-", "-", "missing prod or imp table");
    return out;
  }
  if (Report r = validate_join_semilattice(alg); !r) {
    out.report = r;
    return out;
  }
  for (auto check : {check_idempotent, check_bridge_identity, validate_rrs,
                     check_divisible}) {
    if (Report r = check(alg); !r) {
      out.report = r;
      return out;
    }
  }
  for (std::size_t x = 0; x < alg.size(); ++x) {
    for (std::size_t y = 0; y < alg.size(); ++y) {
      if (alg.prod(x, y) == UNDEF) continue;
      auto const m = infimum(alg, x, y);
      if (!m || *m != alg.prod(x, y)) {
        out.report = Report::fail(
            "meet-coincidence", {elem_t(x), elem_t(y)},
            alg.label(alg.prod(x, y)), m ? alg.label(*m) : "-",
            "product differs from the infimum");
        return out;
      }
    }
  }
  Algebra ncis = alg.with_meet(*alg.prod_table())
                     .with_prod(std::nullopt)
                     .with_class(ClassTag::ncis);
  if (Report r = validate_ncis(ncis); !r) {
    out.report = r;
    return out;
  }
  out.report  = Report::pass();
  out.algebra = std::move(ncis);
  return out;
}

}  // namespace ordalg
