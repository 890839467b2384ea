#include <doctest.h>

#include "ordalg/io.hpp"
#include "ordalg/order.hpp"
#include "support.hpp"

using namespace ordalg;
using testing::el;
using testing::fixture;
using testing::from_order;

TEST_CASE("order primitives on the two-chain example") {
  Algebra const f1 = fixture("fig1.alg");
  CHECK(f1.size() == 5);
  CHECK(f1.label(f1.top()) == "1");
  CHECK(leq(f1, el(f1, "a"), el(f1, "b")));
  CHECK_FALSE(leq(f1, el(f1, "a"), el(f1, "c")));
  for (elem_t x = 0; x < f1.size(); ++x) {
    CHECK(leq(f1, x, f1.top()));
    CHECK(join(f1, x, x) == x);
    CHECK(common_lower_bounds(f1, x, x).size() >= 1);
  }
  CHECK(common_lower_bounds(f1, el(f1, "a"), el(f1, "c")).empty());
  CHECK(partial_meet(f1, el(f1, "a"), el(f1, "d")) == UNDEF);
  auto const sec = section(f1, el(f1, "a"));
  CHECK(sec == std::vector<elem_t>{el(f1, "a"), el(f1, "b"), el(f1, "1")});
  CHECK(section(f1, f1.top()) == std::vector<elem_t>{f1.top()});
  CHECK(validate_join_semilattice(f1));
}

TEST_CASE("order primitives on the pentagon example") {
  Algebra const f2 = fixture("fig2.alg");
  CHECK(join(f2, el(f2, "a"), el(f2, "b")) == el(f2, "1"));
  CHECK(join(f2, el(f2, "a"), el(f2, "c")) == el(f2, "c"));
  CHECK(common_lower_bounds(f2, el(f2, "a"), el(f2, "b")) ==
        std::vector<elem_t>{el(f2, "0")});
  CHECK(partial_meet(f2, el(f2, "a"), el(f2, "b")) == el(f2, "0"));
  CHECK(partial_meet(f2, el(f2, "c"), el(f2, "d")) == UNDEF);
  CHECK(section(f2, el(f2, "d")) == std::vector<elem_t>{el(f2, "d"), el(f2, "1")});
}

TEST_CASE("common lower bounds in a join-semilattice are join-closed") {
  // Two maximal lower bounds of u, v would have no join: such an order is
  // refused before any meet is asked for.
  CHECK_THROWS_AS(
      from_order("x y u v 1", {"x < u < 1", "x < v", "y < u", "y < v < 1"}), ParseError);

  // With a least upper bound w of x, y below u and v, the meet is w.
  Algebra const ok = from_order("x y w u v 1",
                                {"x < w", "y < w", "w < u < 1", "w < v < 1"});
  CHECK(partial_meet(ok, el(ok, "u"), el(ok, "v")) == el(ok, "w"));
  CHECK(infimum(ok, el(ok, "u"), el(ok, "v")) == el(ok, "w"));
  CHECK(partial_meet(ok, el(ok, "x"), el(ok, "y")) == UNDEF);
}

TEST_CASE("join-semilattice validation reports the first broken law") {
  std::string const text =
      "algebra\nelements: a b 1\nop join:\n  a a 1\n  b b 1\n  1 1 1\nend\n";
  Algebra const bad = parse_algebra(text, ParseOptions{.check_join_laws = false});
  Report const  rep = validate_join_semilattice(bad);
  CHECK_FALSE(rep);
  CHECK(rep.axiom == "commutativity");
  CHECK(format_witness(bad, rep.witness) == "(a,b)");

  Algebra const chain = from_order("0 a 1", {"0 < a < 1"});
  CHECK(validate_join_semilattice(chain));
}

TEST_CASE("parsing") {
  SUBCASE("one element without tables") {
    Algebra const one = parse_algebra("algebra\nelements: 1\nend\n");
    CHECK(one.size() == 1);
    CHECK(one.join(0, 0) == 0);
  }
  SUBCASE("no least upper bound") {
    try {
      parse_algebra("algebra\nelements: a b c d\norder:\n  a < c\n  a < d\n  b < c\n  b < d\nend\n");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(std::string(e.message()).find("no least upper bound for (a,b)") != std::string::npos);
    }
  }
  SUBCASE("errors carry positions") {
    try {
      parse_algebra("algebra\nelements: a a 1\nend\n");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 13);
      CHECK(e.message() == "duplicate label \"a\"");
    }
  }
  SUBCASE("no unique top") {
    CHECK_THROWS_AS(parse_algebra("algebra\nelements: a b\nend\n"), ParseError);
  }
  SUBCASE("non-associative join is rejected unless lenient") {
    std::string const text =
        "algebra\nelements: a b c 1\nop join:\n"
        "  a b 1 1\n  b b c 1\n  1 c c 1\n  1 1 1 1\nend\n";
    CHECK_THROWS_AS(parse_algebra(text), ParseError);
    Algebra const lax = parse_algebra(text, ParseOptions{.check_join_laws = false});
    CHECK_FALSE(validate_join_semilattice(lax));
  }
  SUBCASE("order block must agree with the join table") {
    std::string const text =
        "algebra\nelements: a 1\norder:\n  a < 1\nop join:\n  1 1\n  1 1\nend\n";
    CHECK_THROWS_AS(parse_algebra(text), ParseError);
  }
  SUBCASE("meet table domain mismatch") {
    std::string const text =
        "algebra\nelements: a b 1\norder:\n  a < 1\n  b < 1\n"
        "op meet partial:\n  a a a\n  - b b\n  a b 1\nend\n";
    try {
      parse_algebra(text);
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(std::string(e.message()).find("meet table domain mismatch at (a,b)") !=
            std::string::npos);
    }
  }
}

TEST_CASE("serialization round-trips") {
  for (char const* name : {"fig1.alg", "fig2.alg", "fig1_order.alg", "fig2_order.alg"}) {
    Algebra const a = fixture(name);
    Algebra const b = parse_algebra(serialize_algebra(a));
    CHECK(a == b);
    CHECK(serialize_algebra(a) == serialize_algebra(b));
  }
}

TEST_CASE("table rendering") {
  Algebra const     f1 = fixture("fig1.alg");
  std::string const expected =
      "imp | a b c d 1\n"
      "----+----------\n"
      "a   | 1 1 c d 1\n"
      "b   | a 1 c d 1\n"
      "c   | a b 1 1 1\n"
      "d   | a b c 1 1\n"
      "1   | a b c d 1\n";
  CHECK(render_table(f1, "imp", *f1.imp_table()) == expected);

  Algebra const wide = from_order("bot mid 1", {"bot < mid < 1"});
  CHECK(render_table(wide, "join", wide.join_table()) ==
        "join | bot mid 1\n"
        "-----+------------\n"
        "bot  | bot mid 1\n"
        "mid  | mid mid 1\n"
        "1    | 1   1   1\n");
}
