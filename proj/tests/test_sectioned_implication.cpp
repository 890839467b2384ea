#include <doctest.h>

#include "ordalg/implication.hpp"
#include "ordalg/order.hpp"
#include "ordalg/search.hpp"
#include "ordalg/sectioned.hpp"
#include "support.hpp"

using namespace ordalg;
using testing::el;
using testing::fixture;
using testing::from_order;

TEST_CASE("pseudocomplements in sections") {
  Algebra const f2 = fixture("fig2_order.alg");
  CHECK(pseudocomplement_in_section(f2, el(f2, "0"), el(f2, "a")) == el(f2, "b"));
  CHECK(pseudocomplement_in_section(f2, el(f2, "0"), el(f2, "1")) == el(f2, "0"));
  for (elem_t x = 0; x < f2.size(); ++x) {
    CHECK(pseudocomplement_in_section(f2, x, x) == f2.top());
  }
  CHECK_THROWS_AS(pseudocomplement_in_section(f2, el(f2, "a"), el(f2, "b")),
                  PreconditionError);

  // Antitone within every section.
  for (elem_t base = 0; base < f2.size(); ++base) {
    for (elem_t u : section(f2, base)) {
      for (elem_t v : section(f2, base)) {
        if (!f2.leq(u, v)) continue;
        auto const pu = pseudocomplement_in_section(f2, base, u);
        auto const pv = pseudocomplement_in_section(f2, base, v);
        CHECK(f2.leq(*pv, *pu));
      }
    }
  }
}

TEST_CASE("sectioned validation") {
  CHECK(validate_sectioned(fixture("fig1_order.alg")));
  CHECK(validate_sectioned(fixture("fig2_order.alg")));

  // The diamond: atoms have no greatest disjoint element in [0, 1].
  Algebra const m3 = from_order("0 p q r 1", {"0 < p < 1", "0 < q < 1", "0 < r < 1"});
  Report const  rm = validate_sectioned(m3);
  CHECK_FALSE(rm);
  CHECK(rm.axiom == "(b)");
  CHECK(format_witness(m3, rm.witness) == "(0,p)");
}

TEST_CASE("section shapes") {
  Algebra const      f2 = fixture("fig2_order.alg");
  SectionShape const s0 = section_shape_report(f2, el(f2, "0"));
  CHECK_FALSE(s0.modular);
  CHECK_FALSE(s0.distributive);
  REQUIRE(s0.witness.has_value());
  CHECK(s0.witness_kind == "N5");
  CHECK(format_witness(f2, std::span<elem_t const>(*s0.witness)) == "(0,a,c,b,1)");
  CHECK(section_shape_report(f2, el(f2, "d")).distributive);

  Algebra const f1 = fixture("fig1_order.alg");
  CHECK(section_shape_report(f1, el(f1, "a")).distributive);

  Algebra const m3 = from_order("0 p q r 1", {"0 < p < 1", "0 < q < 1", "0 < r < 1"});
  SectionShape const sm = section_shape_report(m3, el(m3, "0"));
  CHECK_FALSE(sm.distributive);
  CHECK(sm.modular);
  CHECK(sm.witness_kind == "M3");
}

TEST_CASE("the implication read off the sections") {
  Algebra const i1 = derive_implication(fixture("fig1_order.alg"));
  CHECK(i1.imp(el(i1, "b"), el(i1, "a")) == el(i1, "a"));
  CHECK(i1.imp(el(i1, "b"), el(i1, "d")) == el(i1, "d"));
  CHECK(i1.class_tag() == ClassTag::ncis);

  Algebra const i2 = derive_implication(fixture("fig2_order.alg"));
  CHECK(i2.imp(el(i2, "d"), el(i2, "0")) == el(i2, "0"));
  CHECK(i2.imp(el(i2, "0"), el(i2, "d")) == el(i2, "d"));
  for (elem_t x = 0; x < i2.size(); ++x) {
    CHECK(i2.imp(i2.top(), x) == x);
  }
  CHECK_THROWS_AS(derive_implication(from_order("0 p q r 1",
                                                {"0 < p < 1", "0 < q < 1", "0 < r < 1"})),
                  PreconditionError);
}

TEST_CASE("derived tables agree with the stored fixtures") {
  Algebra const f1 = fixture("fig1.alg");
  Algebra const d1 = derive_implication(fixture("fig1_order.alg"));
  CHECK(*d1.imp_table() == *f1.imp_table());
  CHECK(*d1.meet_table() == *f1.meet_table());

  Algebra const f2 = fixture("fig2.alg");
  Algebra const d2 = derive_implication(fixture("fig2_order.alg"));
  CHECK(*d2.imp_table() == *f2.imp_table());
  CHECK(*d2.meet_table() == *f2.meet_table());
}

TEST_CASE("the pentagon table as printed differs in one cell") {
  Algebra const printed = fixture("fig2_paper.alg");
  Algebra const derived = derive_implication(fixture("fig2_order.alg"));
  int           differing = 0;
  for (elem_t x = 0; x < printed.size(); ++x) {
    for (elem_t y = 0; y < printed.size(); ++y) {
      if (printed.imp(x, y) != derived.imp(x, y)) {
        ++differing;
        CHECK(printed.label(x) == "0");
        CHECK(printed.label(y) == "d");
      }
    }
  }
  CHECK(differing == 1);
  Report const rep = validate_ncis(printed);
  CHECK_FALSE(rep);
  CHECK(fail_line(printed, rep) == "FAIL axiom=(2) witness=(0,d) lhs=1 rhs=d");
}

TEST_CASE("NCIS axioms") {
  CHECK(validate_ncis(fixture("fig1.alg")));
  CHECK(validate_ncis(fixture("fig2.alg")));
  CHECK(validate_ncis(parse_algebra("algebra\nelements: 1\nop imp:\n  1\nend\n")));

  Algebra const bad = fixture("fig1_corrupted.alg");
  Report const  rep = validate_ncis(bad);
  CHECK_FALSE(rep);
  CHECK(fail_line(bad, rep) == "FAIL axiom=(2) witness=(b,a) lhs=b rhs=a");
}

TEST_CASE("NCIS consequences") {
  Algebra const f2 = fixture("fig2.alg");
  CHECK(check_ncis_properties(f2));
  CHECK(check_ncis_properties(fixture("fig1.alg")));
  // a <= (a -> 0) -> 0 = b -> 0 = c
  elem_t const a = el(f2, "a"), z = el(f2, "0");
  CHECK(f2.imp(f2.imp(a, z), z) == el(f2, "c"));
  // (5): x -> y = 1 exactly when x <= y.
  for (elem_t x = 0; x < f2.size(); ++x) {
    for (elem_t y = 0; y < f2.size(); ++y) {
      CHECK((f2.imp(x, y) == f2.top()) == f2.leq(x, y));
    }
  }
}

TEST_CASE("sections and implication are mutually inverse on the enumerated corpus") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Algebra const& jsl : enumerate_jsl(n)) {
      if (!validate_sectioned(jsl)) continue;
      SectionedAlgebra const s = make_sectioned(jsl);
      CHECK(validate_sectioned(s));
      Algebra const ncis = derive_implication(s);
      CHECK(validate_ncis(ncis));
      SectionedAlgebra const back = derive_sections(ncis);
      CHECK(back.pseudocomplements == s.pseudocomplements);
      CHECK(back.alg == s.alg);
      CHECK(derive_implication(back) == ncis);
    }
  }
}

TEST_CASE("derive_sections rejects a non-model") {
  CHECK_THROWS_AS(derive_sections(fixture("fig1_corrupted.alg")), PreconditionError);
  Algebra const f1 = fixture("fig1.alg");
  SectionedAlgebra const s = derive_sections(f1);
  // d^c = d -> c = c
  CHECK(s.pseudocomplements(el(f1, "c"), el(f1, "d")) == el(f1, "c"));
}
