#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordalg/cli.hpp"
#include "ordalg/classes.hpp"
#include "ordalg/io.hpp"
#include "support.hpp"

using namespace ordalg;
using testing::data_path;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string path(char const* name) { return data_path(name).string(); }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "ordalg_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

}  // namespace

TEST_CASE("check") {
  auto const ok = run({"check", path("fig1.alg"), "--class", "ncis"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "PASS ncis\n");

  auto const bad = run({"check", path("fig1_corrupted.alg"), "--class", "ncis"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "FAIL axiom=(2) witness=(b,a) lhs=b rhs=a\n");
  CHECK_FALSE(bad.err.empty());

  auto const props = run({"check", path("fig2_order.alg"), "--class", "sectioned", "--props"});
  CHECK(props.code == 0);
  CHECK(props.out.find("section 0: distributive:false modular:false witness=N5(0,a,c,b,1)") !=
        std::string::npos);

  CHECK(run({"check", path("fig2.alg"), "--props"}).code == 0);
  CHECK(run({"check", path("fig1_order.alg"), "--class", "jsl"}).code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", path("fig1.alg"), "--bogus"}).code == 2);
  CHECK(run({"check", path("missing.alg")}).code == 2);
  CHECK(run({"check", path("fig1.alg"), "--class", "monoid"}).code == 2);
  CHECK(run({"derive", path("fig1.alg"), "--map", "Z"}).code == 2);
  CHECK(run({"con", path("fig1.alg")}).code == 2);
  CHECK(run({"search", "--class", "jsl", "--size", "9"}).code == 2);
  CHECK(run({"search", "--class", "jsl", "--size", "3", "--violate", "nope"}).code == 2);

  auto const tmp = scratch("broken.alg");
  std::ofstream(tmp) << "algebra\nelements: a a 1\nend\n";
  auto const r = run({"tables", tmp.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(":2:13: duplicate label") != std::string::npos);
}

TEST_CASE("derive output re-parses under the target class") {
  auto const i = run({"derive", path("fig1_order.alg"), "--map", "I"});
  REQUIRE(i.code == 0);
  Algebra const ncis = parse_algebra(i.out);
  CHECK(ncis.class_tag() == ClassTag::ncis);
  CHECK(ncis == read_algebra_file(data_path("fig1.alg")));

  auto const a_file = scratch("fig2_ialg.alg");
  REQUIRE(run({"derive", path("fig2.alg"), "--map", "A", "-o", a_file.string()}).code == 0);
  Algebra const ia = read_algebra_file(a_file);
  CHECK(validate_class(ia, ClassTag::ialg));
  auto const j = run({"derive", a_file.string(), "--map", "J"});
  REQUIRE(j.code == 0);
  CHECK(parse_algebra(j.out) == read_algebra_file(data_path("fig2.alg")));

  auto const con = run({"con", a_file.string(), "--report", "full"});
  CHECK(con.code == 0);
  CHECK(con.out.find("three_permutable: true") != std::string::npos);
  CHECK(con.out.find("terms: PASS") != std::string::npos);
  CHECK(con.out.find("{0}{a}{b}{c}{d}{1}") != std::string::npos);

  auto const s = run({"derive", path("fig2.alg"), "--map", "S"});
  REQUIRE(s.code == 0);
  CHECK(parse_algebra(s.out).class_tag() == ClassTag::sectioned);

  CHECK(run({"derive", path("fig1_corrupted.alg"), "--map", "A"}).code == 1);
  CHECK(run({"derive", path("fig1.alg"), "--map", "B"}).code == 2);
}

TEST_CASE("product-side maps") {
  auto const rrs_file = scratch("fig1_rrs.alg");
  auto const ralg_file = scratch("fig1_ralg.alg");
  {
    Algebra const f1 = read_algebra_file(data_path("fig1.alg"));
    write_algebra_file(rrs_file, f1.with_prod(f1.meet_table())
                                     .with_meet(std::nullopt)
                                     .with_class(ClassTag::rrs));
  }
  CHECK(run({"check", rrs_file.string(), "--props"}).code == 0);
  REQUIRE(run({"derive", rrs_file.string(), "--map", "B", "-o", ralg_file.string()}).code == 0);
  CHECK(run({"check", ralg_file.string(), "--class", "ralg", "--subvariety"}).code == 0);
  auto const srs = run({"derive", rrs_file.string(), "--map", "S"});
  REQUIRE(srs.code == 0);
  CHECK(parse_algebra(srs.out).class_tag() == ClassTag::srs);

  for (auto const& [file, pair] :
       std::vector<std::pair<std::string, std::string>>{
           {path("fig1_order.alg"), "sectioned-ncis"},
           {path("fig1.alg"), "sectioned-ncis"},
           {path("fig2.alg"), "ncis-ialg"},
           {path("fig2.alg"), "ncis-rrs"},
           {rrs_file.string(), "srs-rrs"},
           {rrs_file.string(), "rrs-ralg"},
           {rrs_file.string(), "ncis-rrs"},
           {ralg_file.string(), "rrs-ralg"}}) {
    auto const r = run({"roundtrip", file, "--pair", pair});
    CHECK_MESSAGE(r.code == 0, file << " " << pair << ": " << r.out << r.err);
    CHECK(r.out == "IDENTICAL\n");
  }
  CHECK(run({"roundtrip", path("fig1_corrupted.alg"), "--pair", "ncis-ialg"}).code == 1);
}

TEST_CASE("tables") {
  auto const t = run({"tables", path("fig2.alg")});
  CHECK(t.code == 0);
  CHECK(t.out.find("d   | 0 a b c 1 1\n") != std::string::npos);
  CHECK(t.out.find("meet | 0 a b c d 1\n") != std::string::npos);
}

TEST_CASE("search") {
  CHECK(run({"search", "--class", "jsl", "--size", "3", "--count"}).out == "2\n");
  CHECK(run({"search", "--class", "ncis", "--size", "5", "--upto", "--count"}).out == "23\n");

  auto const dir = scratch("models");
  std::filesystem::remove_all(dir);
  auto const w = run({"search", "--class", "sectioned", "--size", "4", "--out", dir.string()});
  CHECK(w.code == 0);
  CHECK(std::filesystem::exists(dir / "sectioned_4_1.alg"));
  CHECK(std::filesystem::exists(dir / "sectioned_4_5.alg"));
  CHECK_FALSE(std::filesystem::exists(dir / "sectioned_4_6.alg"));
  CHECK(validate_class(read_algebra_file(dir / "sectioned_4_3.alg"), ClassTag::sectioned));

  auto const v = run({"search", "--class", "sectioned", "--size", "6", "--upto",
                      "--violate", "section-modular"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL axiom=section-modular") != std::string::npos);

  auto const none = run({"search", "--class", "ialg", "--size", "4", "--upto",
                         "--violate", "con-distributive"});
  CHECK(none.out == "NONE\n");

  auto const big = run({"search", "--class", "jsl", "--size", "2", "--max-size", "9", "--count"});
  CHECK(big.code == 0);
  CHECK(big.err.find("warning") != std::string::npos);
}
