#include "ordalg/implication.hpp"

#include "ordalg/order.hpp"

namespace ordalg {

namespace {

  std::string tf(bool b) { return b ? "true" : "false"; }

  // Shared structural checks for anything carrying a total imp table.
  Report check_imp_present(Algebra const& alg) {
    if (!alg.imp_table()) {
      return Report::fail("imp", {}, "-", "-", "missing imp table");
    }
    for (std::size_t x = 0; x < alg.size(); ++x) {
      for (std::size_t y = 0; y < alg.size(); ++y) {
        if (alg.imp(x, y) >= alg.size()) {
          return Report::fail("imp", {elem_t(x), elem_t(y)},
                              label_or_undef(alg, alg.imp(x, y)), "element",
                              "imp table must be total");
        }
      }
    }
    return Report::pass();
  }

}  // namespace

Algebra derive_implication(SectionedAlgebra const& s) {
  Algebra const&    alg = s.alg;
  std::size_t const n   = alg.size();
  BinTable          imp(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const v = s.pseudocomplements(y, alg.join(x, y));
      if (v == UNDEF) {
        throw PreconditionError("derive_implication: missing pseudocomplement of "
                                + alg.label(alg.join(x, y)) + " over "
                                + alg.label(y));
      }
      imp.set(x, y, v);
    }
  }
  return alg.with_meet(meet_table_from_order(alg))
      .with_imp(std::move(imp))
      .with_class(ClassTag::ncis);
}

Algebra derive_implication(Algebra const& alg) {
  return derive_implication(make_sectioned(alg));
}

SectionedAlgebra derive_sections(Algebra const& ncis) {
  Report const rep = validate_ncis(ncis);
  if (!rep) {
    throw PreconditionError("derive_sections: not an NCIS: "
                            + fail_line(ncis, rep));
  }
  std::size_t const n = ncis.size();
  BinTable          pc(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (elem_t y : section(ncis, x)) {
      pc.set(x, y, ncis.imp(y, x));
    }
  }
  Algebra out = ncis.with_meet(meet_table_from_order(ncis))
                    .with_imp(std::nullopt)
                    .with_class(ClassTag::sectioned);
  return {std::move(out), std::move(pc)};
}

Report validate_ncis(Algebra const& alg) {
  if (Report r = validate_join_semilattice(alg); !r) {
    return r;
  }
  if (Report r = check_imp_present(alg); !r) {
    return r;
  }
  std::size_t const n = alg.size();
  auto const        L = [&](elem_t e) { return label_or_undef(alg, e); };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (bounded(alg, x, y) && !infimum(alg, x, y)) {
        return Report::fail("meet-domain", {elem_t(x), elem_t(y)}, "-", "meet",
                            "bounded pair without a greatest lower bound");
      }
    }
  }
  BinTable const meet = meet_table_from_order(alg);
  if (alg.meet_table()) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if ((*alg.meet_table())(x, y) != meet(x, y)) {
          return Report::fail("meet-table", {elem_t(x), elem_t(y)},
                              L((*alg.meet_table())(x, y)), L(meet(x, y)),
                              "stored meet differs from the infimum");
        }
      }
    }
  }

  // (1) y <= x -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!alg.leq(y, alg.imp(x, y))) {
        return Report::fail("(1)", {elem_t(x), elem_t(y)}, L(y),
                            L(alg.imp(x, y)));
      }
    }
  }
  // (2) (x v y) ^ (x -> y) = y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const m = meet(alg.join(x, y), alg.imp(x, y));
      if (m != y) {
        return Report::fail("(2)", {elem_t(x), elem_t(y)}, L(m), L(y),
                            m == UNDEF ? "meet undefined" : "");
      }
    }
  }
  // (3) (x v y) -> y = x -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const lhs = alg.imp(alg.join(x, y), y);
      if (lhs != alg.imp(x, y)) {
        return Report::fail("(3)", {elem_t(x), elem_t(y)}, L(lhs),
                            L(alg.imp(x, y)));
      }
    }
  }
  // (4) y <= (x v z) -> ((x v z) ^ (y v z))
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        elem_t const a = alg.join(x, z);
        elem_t const m = meet(a, alg.join(y, z));
        if (m == UNDEF) {
          return Report::fail("(4)", {elem_t(x), elem_t(y), elem_t(z)}, L(y),
                              "-", "meet undefined");
        }
        elem_t const rhs = alg.imp(a, m);
        if (!alg.leq(y, rhs)) {
          return Report::fail("(4)", {elem_t(x), elem_t(y), elem_t(z)}, L(y),
                              L(rhs));
        }
      }
    }
  }
  return Report::pass();
}

Report check_ncis_properties(Algebra const& alg) {
  if (Report r = check_imp_present(alg); !r) {
    return r;
  }
  std::size_t const n   = alg.size();
  elem_t const      top = alg.top();
  auto const        L   = [&](elem_t e) { return label_or_undef(alg, e); };
  auto const        imp = [&](elem_t x, elem_t y) { return alg.imp(x, y); };

  // (5) x <= y iff x -> y = 1
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool const le = alg.leq(x, y);
      bool const one = imp(x, y) == top;
      if (le != one) {
        return Report::fail("(5)", {elem_t(x), elem_t(y)}, tf(le), tf(one));
      }
    }
  }
  // (6) x <= y implies y -> z <= x -> z
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!alg.leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!alg.leq(imp(y, z), imp(x, z))) {
          return Report::fail("(6)", {elem_t(x), elem_t(y), elem_t(z)},
                              L(imp(y, z)), L(imp(x, z)));
        }
      }
    }
  }
  // (7) x <= (x -> y) -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const rhs = imp(imp(x, y), y);
      if (!alg.leq(x, rhs)) {
        return Report::fail("(7)", {elem_t(x), elem_t(y)}, L(x), L(rhs));
      }
    }
  }
  // (8) ((x -> y) -> y) -> y = x -> y
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const lhs = imp(imp(imp(x, y), y), y);
      if (lhs != imp(x, y)) {
        return Report::fail("(8)", {elem_t(x), elem_t(y)}, L(lhs),
                            L(imp(x, y)));
      }
    }
  }
  // (9) 1 -> x = x
  for (std::size_t x = 0; x < n; ++x) {
    if (imp(top, x) != x) {
      return Report::fail("(9)", {elem_t(x)}, L(imp(top, x)), L(x));
    }
  }
  return Report::pass();
}

}  // namespace ordalg
