#include <doctest.h>

#include "oracles.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/implication.hpp"
#include "ordalg/residuated.hpp"
#include "ordalg/search.hpp"
#include "ordalg/varieties.hpp"
#include "support.hpp"

using namespace ordalg;
using testing::el;
using testing::fixture;

namespace {

  std::set<std::vector<elem_t>> as_set(ConLattice const& con) {
    std::set<std::vector<elem_t>> out;
    for (auto const& p : con.congruences) out.insert(p.class_of());
    return out;
  }

  Algebra two_chain_ialg() {
    return ialgebra_from_ncis(derive_implication(testing::from_order("0 1", {"0 < 1"})));
  }

}  // namespace

TEST_CASE("partitions") {
  Partition const p({3, 3, 7, 7});
  CHECK(p.class_of() == std::vector<elem_t>{0, 0, 2, 2});
  CHECK(p.number_of_classes() == 2);
  CHECK(p.related(0, 1));
  CHECK_FALSE(p.related(1, 2));
  Partition const q({0, 1, 1, 3});
  CHECK(partition_join(p, q) == Partition::full(4));
  CHECK(partition_meet(p, q) == Partition::identity(4));
  CHECK(Partition::identity(4).refines(p));
  CHECK_FALSE(p.refines(q));

  Algebra const f2 = fixture("fig2.alg");
  CHECK(to_string(f2, Partition({0, 0, 2, 3, 3, 5})) == "{0,a}{b}{c,d}{1}");
}

TEST_CASE("principal congruences") {
  Algebra const two = two_chain_ialg();
  CHECK(principal_congruence(two, 0, 0) == Partition::identity(2));
  CHECK(principal_congruence(two, 0, 1) == Partition::full(2));
  CHECK(congruence_lattice(two).size() == 2);

  Algebra const one = ialgebra_from_ncis(parse_algebra(
      "algebra\nelements: 1\nop meet partial:\n  1\nop imp:\n  1\nend\n"));
  CHECK(congruence_lattice(one).size() == 1);
  MaltsevReport const r1 = maltsev_report(one);
  CHECK((r1.three_permutable && r1.con_distributive && r1.weakly_regular));
  CHECK(term_witness_check(one));

  // Every principal congruence is the least compatible partition relating
  // the pair.
  Algebra const a1   = ialgebra_from_ncis(fixture("fig1.alg"));
  auto const    all  = oracle::congruences_bruteforce(a1);
  elem_t const  a    = el(a1, "a"), b = el(a1, "b");
  Partition const pab = principal_congruence(a1, a, b);
  CHECK(all.count(pab.class_of()) == 1);
  for (auto const& cls : all) {
    if (cls[a] == cls[b]) CHECK(pab.refines(Partition(cls)));
  }
}

TEST_CASE("partial tables are refused") {
  CHECK_THROWS_AS(congruence_lattice(fixture("fig1.alg")), PreconditionError);
}

TEST_CASE("congruence lattices of the examples") {
  for (char const* name : {"fig1.alg", "fig2.alg"}) {
    Algebra const    ia  = ialgebra_from_ncis(fixture(name));
    ConLattice const con = congruence_lattice(ia);
    CHECK(as_set(con) == oracle::congruences_bruteforce(ia));
    CHECK(con.congruences.front() == Partition::identity(ia.size()));
    CHECK(con.congruences.back() == Partition::full(ia.size()));
    MaltsevReport const rep = maltsev_report(con, ia.top());
    CHECK(rep.three_permutable);
    CHECK(rep.con_distributive);
    CHECK(rep.weakly_regular);
    CHECK(term_witness_check(ia));
  }
  // Frozen after agreement with the partition filter above.
  CHECK(congruence_lattice(ialgebra_from_ncis(fixture("fig2.alg"))).size() == 6);
  CHECK(congruence_lattice(ialgebra_from_ncis(fixture("fig1.alg"))).size() == 9);
}

TEST_CASE("Maltsev term instance") {
  Algebra const a1 = ialgebra_from_ncis(fixture("fig1.alg"));
  elem_t const  c = el(a1, "c"), d = el(a1, "d");
  // t1(c,d,d) = r(d, d -> c, c) = c
  CHECK(a1.r(d, a1.imp(d, c), c) == c);
}

TEST_CASE("semilattice reducts are neither congruence distributive nor regular") {
  // The square 0 < p, q < 1 as a join-semilattice.
  Algebra const square = testing::from_order("0 p q 1", {"0 < p < 1", "0 < q < 1"}).bare();
  MaltsevReport const sq = maltsev_report(square);
  CHECK_FALSE(sq.con_distributive);
  CHECK(sq.distributivity_witness.has_value());

  // In a chain 0 < a < 1 the identity and {0,a}{1} share the class {1}.
  Algebra const chain = testing::from_order("0 a 1", {"0 < a < 1"}).bare();
  MaltsevReport const ch = maltsev_report(chain);
  CHECK_FALSE(ch.weakly_regular);
  CHECK(ch.regularity_witness.has_value());
}

TEST_CASE("R-algebra term checks") {
  Algebra const rr = *ncis_rrs_bridge(fixture("fig2.alg"), BridgeDirection::to_rrs).algebra;
  Algebra const ra = ralgebra_from_rrs(rr);
  CHECK(term_witness_check(ra));
  ConLattice const con = congruence_lattice(ra);
  CHECK(as_set(con) == oracle::congruences_bruteforce(ra));
}

TEST_CASE("broken implication fails the regularity scheme") {
  Algebra const a1  = ialgebra_from_ncis(fixture("fig1.alg"));
  BinTable      imp = *a1.imp_table();
  imp.set(el(a1, "b"), el(a1, "a"), a1.top());
  Report const rep = term_witness_check(a1.with_imp(imp));
  CHECK_FALSE(rep);
}

TEST_CASE("congruence lattices match the partition filter on the corpus") {
  for (std::size_t n = 1; n <= 5; ++n) {
    SearchSpec spec;
    spec.class_tag = ClassTag::ialg;
    spec.size      = n;
    for (Algebra const& ia : enumerate_models(spec)) {
      CHECK(as_set(congruence_lattice(ia)) == oracle::congruences_bruteforce(ia));
    }
    spec.class_tag = ClassTag::jsl;
    for (Algebra const& j : enumerate_models(spec)) {
      CHECK(as_set(congruence_lattice(j.bare())) ==
            oracle::congruences_bruteforce(j.bare()));
    }
  }
}
