#include "ordalg/sectioned.hpp"

#include "ordalg/order.hpp"

namespace ordalg {

namespace {

  bool meet_is(Algebra const& alg, elem_t x, elem_t y, elem_t m) {
    auto const inf = infimum(alg, x, y);
    return inf && *inf == m;
  }

}  // namespace

std::optional<elem_t> pseudocomplement_in_section(Algebra const& alg,
                                                  elem_t base, elem_t y) {
  if (!alg.leq(base, y)) {
    throw PreconditionError("pseudocomplement_in_section: " + alg.label(base)
                            + " is not below " + alg.label(y));
  }
  std::vector<elem_t> candidates;
  for (elem_t z : section(alg, base)) {
    if (meet_is(alg, y, z, base)) {
      candidates.push_back(z);
    }
  }
  for (elem_t c : candidates) {
    bool greatest = true;
    for (elem_t z : candidates) {
      if (!alg.leq(z, c)) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      return c;
    }
  }
  return std::nullopt;
}

SectionReport section_report(Algebra const& alg, elem_t base) {
  SectionReport rep;
  rep.base       = base;
  rep.is_lattice = true;
  auto const sec = section(alg, base);
  for (elem_t u : sec) {
    for (elem_t v : sec) {
      if (!infimum(alg, u, v)) {
        rep.is_lattice      = false;
        rep.failure_witness = std::make_pair(u, v);
        return rep;
      }
    }
  }
  for (elem_t y : sec) {
    auto pc = pseudocomplement_in_section(alg, base, y);
    if (!pc) {
      rep.failure_witness = std::make_pair(base, y);
      return rep;
    }
    rep.pseudocomplements.emplace(y, *pc);
  }
  return rep;
}

Report validate_sectioned(Algebra const& alg) {
  std::size_t const n = alg.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (bounded(alg, x, y) && !infimum(alg, x, y)) {
        return Report::fail("(a)", {elem_t(x), elem_t(y)}, "-", "meet",
                            "bounded pair without a greatest lower bound");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (elem_t y : section(alg, x)) {
      if (!pseudocomplement_in_section(alg, x, y)) {
        return Report::fail("(b)", {elem_t(x), y}, "-", "pseudocomplement",
                            "no pseudocomplement of " + alg.label(y)
                                + " in the section of " + alg.label(x));
      }
    }
  }
  return Report::pass();
}

Report validate_sectioned(SectionedAlgebra const& s) {
  Report base = validate_sectioned(s.alg);
  if (!base) {
    return base;
  }
  Algebra const&    alg = s.alg;
  std::size_t const n   = alg.size();
  if (s.pseudocomplements.size() != n) {
    return Report::fail("pc", {}, "-", "-", "pseudocomplement table size");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      elem_t const stored = s.pseudocomplements(x, y);
      if (!alg.leq(x, y)) {
        if (stored != UNDEF) {
          return Report::fail("pc", {elem_t(x), elem_t(y)},
                              label_or_undef(alg, stored), "-",
                              "pseudocomplement outside the section");
        }
        continue;
      }
      elem_t const actual = *pseudocomplement_in_section(alg, x, y);
      if (stored != actual) {
        return Report::fail("pc", {elem_t(x), elem_t(y)},
                            label_or_undef(alg, stored), alg.label(actual));
      }
    }
  }
  return Report::pass();
}

SectionedAlgebra make_sectioned(Algebra const& alg) {
  Report const rep = validate_sectioned(alg);
  if (!rep) {
    throw PreconditionError("not a sectioned semilattice: " + fail_line(alg, rep));
  }
  std::size_t const n = alg.size();
  BinTable          pc(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (elem_t y : section(alg, x)) {
      pc.set(x, y, *pseudocomplement_in_section(alg, x, y));
    }
  }
  Algebra out = alg.with_meet(meet_table_from_order(alg))
                    .with_imp(std::nullopt)
                    .with_prod(std::nullopt)
                    .with_r(std::nullopt)
                    .with_q(std::nullopt)
                    .with_class(ClassTag::sectioned);
  return {std::move(out), std::move(pc)};
}

SectionShape section_shape_report(Algebra const& alg, elem_t base) {
  auto const sec = section(alg, base);
  for (elem_t u : sec) {
    for (elem_t v : sec) {
      if (!infimum(alg, u, v)) {
        throw PreconditionError("section of " + alg.label(base)
                                + " is not a lattice");
      }
    }
  }
  auto const lt = [&](elem_t a, elem_t b) { return a != b && alg.leq(a, b); };
  auto const incomparable = [&](elem_t a, elem_t b) {
    return !alg.leq(a, b) && !alg.leq(b, a);
  };
  auto const meet = [&](elem_t a, elem_t b) { return *infimum(alg, a, b); };

  SectionShape shape;
  // Pentagon: o < x < y < i, z incomparable to x and y,
  // x v z = y v z = i, x ^ z = y ^ z = o.
  for (elem_t o : sec) {
    for (elem_t x : sec) {
      if (!lt(o, x)) continue;
      for (elem_t y : sec) {
        if (!lt(x, y)) continue;
        for (elem_t z : sec) {
          if (!lt(o, z) || !incomparable(z, x) || !incomparable(z, y)) continue;
          for (elem_t i : sec) {
            if (!lt(y, i) || !lt(z, i)) continue;
            if (alg.join(x, z) == i && alg.join(y, z) == i
                && meet(x, z) == o && meet(y, z) == o) {
              shape.modular      = false;
              shape.distributive = false;
              shape.witness      = std::array<elem_t, 5>{o, x, y, z, i};
              shape.witness_kind = "N5";
              return shape;
            }
          }
        }
      }
    }
  }
  // Diamond: three pairwise incomparable elements with common join i and
  // common meet o.
  for (elem_t o : sec) {
    for (elem_t x : sec) {
      if (!lt(o, x)) continue;
      for (elem_t y : sec) {
        if (y <= x || !lt(o, y) || !incomparable(x, y)) continue;
        for (elem_t z : sec) {
          if (z <= y || !lt(o, z) || !incomparable(x, z)
              || !incomparable(y, z)) {
            continue;
          }
          elem_t const i = alg.join(x, y);
          if (alg.join(x, z) != i || alg.join(y, z) != i) continue;
          if (meet(x, y) != o || meet(x, z) != o || meet(y, z) != o) continue;
          shape.distributive = false;
          shape.witness      = std::array<elem_t, 5>{o, x, y, z, i};
          shape.witness_kind = "M3";
          return shape;
        }
      }
    }
  }
  return shape;
}

}  // namespace ordalg
