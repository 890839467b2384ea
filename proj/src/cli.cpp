#include "ordalg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "ordalg/algebra.hpp"
#include "ordalg/classes.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/implication.hpp"
#include "ordalg/io.hpp"
#include "ordalg/order.hpp"
#include "ordalg/residuated.hpp"
#include "ordalg/search.hpp"
#include "ordalg/sectioned.hpp"
#include "ordalg/varieties.hpp"

namespace ordalg::cli {

namespace {

  // Raised for bad input after parsing the command line; maps to exit 2.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct Io {
    std::ostream& out;
    std::ostream& err;
  };

  Algebra load(std::string const& path, bool lenient = false) {
    if (!std::filesystem::exists(path)) {
      throw UsageError("cannot open " + path);
    }
    ParseOptions options;
    options.check_join_laws = !lenient;
    try {
      return read_algebra_file(path, options);
    } catch (ParseError const& e) {
      throw UsageError(path + ":" + std::to_string(e.line()) + ":" +
                       std::to_string(e.column()) + ": " + e.message());
    }
  }

  int report_failure(Io io, Algebra const& alg, Report const& rep,
                     std::string const& context) {
    io.out << fail_line(alg, rep) << '\n';
    io.err << context << ": " << rep.axiom << " fails at "
           << format_witness(alg, rep.witness);
    if (!rep.detail.empty()) io.err << " (" << rep.detail << ")";
    io.err << '\n';
    return kExitFailed;
  }

  // The machine-readable line for a ternary operation that does not
  // induce a well-defined binary one.
  Report not_well_defined(Algebra const& alg, NotWellDefinedError const& e) {
    auto const& w = e.witness();
    std::string lhs = "-", rhs = "-";
    if (w.size() == 4) {
      bool const r = alg.r_table().has_value();
      auto const t = [&](elem_t x, elem_t y, elem_t z) {
        return r ? alg.r(x, y, z) : alg.q(x, y, z);
      };
      lhs = label_or_undef(alg, t(w[0], w[1], w[2]));
      rhs = label_or_undef(alg, t(w[0], w[1], w[3]));
    }
    return Report::fail("well-defined", w, lhs, rhs, e.what());
  }

  ClassTag parse_class(std::string const& text) {
    auto tag = parse_class_tag(text);
    if (!tag) throw UsageError("unknown class " + text);
    return *tag;
  }

  // ---- check ---------------------------------------------------------

  struct CheckArgs {
    std::string file;
    std::string cls;
    bool        props      = false;
    bool        subvariety = false;
  };

  // Section shapes are reported, not judged: sections need not be
  // distributive or modular.
  void section_props(Io io, Algebra const& alg) {
    for (std::size_t b = 0; b < alg.size(); ++b) {
      SectionShape const s = section_shape_report(alg, static_cast<elem_t>(b));
      io.out << "section " << alg.label(b) << ": distributive:"
             << (s.distributive ? "true" : "false")
             << " modular:" << (s.modular ? "true" : "false");
      if (s.witness) {
        io.out << " witness=" << s.witness_kind
               << format_witness(alg, std::span<elem_t const>(*s.witness));
      }
      io.out << '\n';
    }
  }

  int do_check(Io io, CheckArgs const& a) {
    ClassTag tag = a.cls.empty() ? ClassTag::none : parse_class(a.cls);
    Algebra const alg = load(a.file, tag == ClassTag::jsl);
    if (tag == ClassTag::none) tag = infer_class(alg);

    Report rep = validate_class(alg, tag, a.subvariety);
    if (!rep) return report_failure(io, alg, rep, std::string(to_string(tag)));

    if (a.props) {
      switch (tag) {
        case ClassTag::sectioned:
          section_props(io, alg);
          break;
        case ClassTag::ncis: rep = check_ncis_properties(alg); break;
        case ClassTag::rrs: rep = check_rrs_properties(alg); break;
        case ClassTag::srs: rep = check_rrs_properties(rrs_from_srs(srs_from_table(alg))); break;
        case ClassTag::ialg: rep = check_ialgebra_derived(alg); break;
        case ClassTag::ralg: rep = check_rrs_properties(rrs_from_ralgebra(alg)); break;
        default: break;
      }
      if (!rep) {
        return report_failure(io, alg, rep,
                              std::string(to_string(tag)) + " properties");
      }
    }
    io.out << "PASS " << to_string(tag) << '\n';
    return kExitOk;
  }

  // ---- derive --------------------------------------------------------

  struct DeriveArgs {
    std::string file;
    std::string map;
    std::string output;
  };

  int do_derive(Io io, DeriveArgs const& a) {
    Algebra const in  = load(a.file);
    ClassTag const src = infer_class(in);

    auto const require = [&](ClassTag want) -> std::optional<int> {
      if (src != want &&
          !(want == ClassTag::sectioned && src == ClassTag::jsl)) {
        throw UsageError("map " + a.map + " needs a " +
                         std::string(to_string(want)) + " input, got " +
                         std::string(to_string(src)));
      }
      Report rep = validate_class(in, want);
      if (!rep) return report_failure(io, in, rep, std::string(to_string(want)));
      return std::nullopt;
    };

    std::optional<Algebra> result;
    ClassTag               target = ClassTag::none;
    try {
      if (a.map == "I") {
        if (auto rc = require(ClassTag::sectioned)) return *rc;
        result = derive_implication(in.bare());
        target = ClassTag::ncis;
      } else if (a.map == "S" && src == ClassTag::rrs) {
        if (auto rc = require(ClassTag::rrs)) return *rc;
        result = in.with_class(ClassTag::srs);
        target = ClassTag::srs;
      } else if (a.map == "S") {
        if (auto rc = require(ClassTag::ncis)) return *rc;
        result = derive_sections(in).alg;
        target = ClassTag::sectioned;
      } else if (a.map == "R") {
        if (auto rc = require(ClassTag::srs)) return *rc;
        result = rrs_from_srs(srs_from_table(in));
        target = ClassTag::rrs;
      } else if (a.map == "A") {
        if (auto rc = require(ClassTag::ncis)) return *rc;
        result = ialgebra_from_ncis(in);
        target = ClassTag::ialg;
      } else if (a.map == "J") {
        if (auto rc = require(ClassTag::ialg)) return *rc;
        result = ncis_from_ialgebra(in);
        target = ClassTag::ncis;
      } else if (a.map == "B") {
        if (auto rc = require(ClassTag::rrs)) return *rc;
        result = ralgebra_from_rrs(in);
        target = ClassTag::ralg;
      } else if (a.map == "Q") {
        if (auto rc = require(ClassTag::ralg)) return *rc;
        result = rrs_from_ralgebra(in);
        target = ClassTag::rrs;
      } else {
        throw UsageError("unknown map " + a.map);
      }
    } catch (NotWellDefinedError const& e) {
      return report_failure(io, in, not_well_defined(in, e), "derive " + a.map);
    }

    Algebra const out = result->with_name(in.name()).with_class(target);
    std::string const text = serialize_algebra(out);
    // The output must read back as a valid member of the target class.
    Algebra const back = parse_algebra(text);
    if (Report rep = validate_class(back, target); !rep) {
      return report_failure(io, back, rep, "derived output");
    }
    if (a.output.empty()) {
      io.out << text;
    } else {
      write_algebra_file(a.output, out);
    }
    return kExitOk;
  }

  // ---- roundtrip -----------------------------------------------------

  std::string cell(Algebra const& alg, std::string_view op,
                   std::initializer_list<std::size_t> idx) {
    std::string s(op);
    for (std::size_t i : idx) s += "[" + alg.label(static_cast<elem_t>(i)) + "]";
    return s;
  }

  std::optional<std::string> binary_difference(Algebra const& alg,
                                               std::string_view op,
                                               std::optional<BinTable> const& x,
                                               std::optional<BinTable> const& y) {
    if (x.has_value() != y.has_value()) {
      return std::string(op) + ": table " + (x ? "dropped" : "added");
    }
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      for (std::size_t j = 0; j < alg.size(); ++j) {
        if ((*x)(i, j) != (*y)(i, j)) {
          return cell(alg, op, {i, j}) + ": " + label_or_undef(alg, (*x)(i, j)) +
                 " -> " + label_or_undef(alg, (*y)(i, j));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> ternary_difference(Algebra const& alg,
                                                std::string_view op,
                                                std::optional<TernTable> const& x,
                                                std::optional<TernTable> const& y) {
    if (x.has_value() != y.has_value()) {
      return std::string(op) + ": table " + (x ? "dropped" : "added");
    }
    if (!x) return std::nullopt;
    std::size_t const n = alg.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if ((*x)(i, j, k) != (*y)(i, j, k)) {
            return cell(alg, op, {i, j, k}) + ": " +
                   label_or_undef(alg, (*x)(i, j, k)) + " -> " +
                   label_or_undef(alg, (*y)(i, j, k));
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> difference(Algebra const& a, Algebra const& b) {
    if (a.universe() != b.universe()) return std::string("universe differs");
    if (auto d = binary_difference(a, "join", a.join_table(), b.join_table())) return d;
    if (auto d = binary_difference(a, "meet", a.meet_table(), b.meet_table())) return d;
    if (auto d = binary_difference(a, "imp", a.imp_table(), b.imp_table())) return d;
    if (auto d = binary_difference(a, "prod", a.prod_table(), b.prod_table())) return d;
    if (auto d = ternary_difference(a, "r", a.r_table(), b.r_table())) return d;
    if (auto d = ternary_difference(a, "q", a.q_table(), b.q_table())) return d;
    return std::nullopt;
  }

  std::optional<std::string> difference(SectionedAlgebra const& a,
                                        SectionedAlgebra const& b) {
    if (auto d = difference(a.alg, b.alg)) return d;
    return binary_difference(a.alg, "pc", a.pseudocomplements,
                             b.pseudocomplements);
  }

  std::optional<std::string> difference(SrsAlgebra const& a, SrsAlgebra const& b) {
    if (auto d = difference(a.alg, b.alg)) return d;
    for (std::size_t x = 0; x < a.section_products.size(); ++x) {
      std::string const op = "prod_" + a.alg.label(static_cast<elem_t>(x));
      if (auto d = binary_difference(a.alg, op, a.section_products[x],
                                     b.section_products[x])) {
        return d;
      }
    }
    return std::nullopt;
  }

  Algebra bridged(Algebra const& alg, BridgeDirection dir) {
    BridgeResult res = ncis_rrs_bridge(alg, dir);
    if (!res.algebra) {
      throw PreconditionError("bridge: " + fail_line(alg, res.report));
    }
    return *res.algebra;
  }

  struct RoundtripArgs {
    std::string file;
    std::string pair;
  };

  int do_roundtrip(Io io, RoundtripArgs const& a) {
    Algebra const  in  = load(a.file);
    ClassTag const src = infer_class(in);

    auto const validated = [&](ClassTag tag) -> std::optional<int> {
      Report rep = validate_class(in, tag);
      if (!rep) return report_failure(io, in, rep, std::string(to_string(tag)));
      return std::nullopt;
    };
    auto const mismatch = [&](std::string const& left) {
      throw UsageError("pair " + a.pair + " does not accept a " +
                       std::string(to_string(src)) + " input (expected " +
                       left + ")");
    };

    std::optional<std::string> diff;
    try {
      if (a.pair == "sectioned-ncis") {
        if (src == ClassTag::sectioned || src == ClassTag::jsl) {
          if (auto rc = validated(ClassTag::sectioned)) return *rc;
          SectionedAlgebra const s = make_sectioned(in.bare());
          diff = difference(s, derive_sections(derive_implication(s)));
        } else if (src == ClassTag::ncis) {
          if (auto rc = validated(ClassTag::ncis)) return *rc;
          diff = difference(in, derive_implication(derive_sections(in)));
        } else {
          mismatch("sectioned or ncis");
        }
      } else if (a.pair == "ncis-ialg") {
        if (src == ClassTag::ncis) {
          if (auto rc = validated(ClassTag::ncis)) return *rc;
          diff = difference(in, ncis_from_ialgebra(ialgebra_from_ncis(in)));
        } else if (src == ClassTag::ialg) {
          if (auto rc = validated(ClassTag::ialg)) return *rc;
          diff = difference(in, ialgebra_from_ncis(ncis_from_ialgebra(in)));
        } else {
          mismatch("ncis or ialg");
        }
      } else if (a.pair == "srs-rrs") {
        if (src == ClassTag::rrs) {
          if (auto rc = validated(ClassTag::rrs)) return *rc;
          diff = difference(in, rrs_from_srs(srs_from_rrs(in)));
        } else if (src == ClassTag::srs) {
          if (auto rc = validated(ClassTag::srs)) return *rc;
          SrsAlgebra const s = srs_from_table(in);
          diff = difference(s, srs_from_rrs(rrs_from_srs(s)));
        } else {
          mismatch("srs or rrs");
        }
      } else if (a.pair == "rrs-ralg") {
        if (src == ClassTag::rrs) {
          if (auto rc = validated(ClassTag::rrs)) return *rc;
          diff = difference(in, rrs_from_ralgebra(ralgebra_from_rrs(in)));
        } else if (src == ClassTag::ralg) {
          if (auto rc = validated(ClassTag::ralg)) return *rc;
          diff = difference(in, ralgebra_from_rrs(rrs_from_ralgebra(in)));
        } else {
          mismatch("rrs or ralg");
        }
      } else if (a.pair == "ncis-rrs") {
        if (src == ClassTag::ncis) {
          if (auto rc = validated(ClassTag::ncis)) return *rc;
          diff = difference(in, bridged(bridged(in, BridgeDirection::to_rrs),
                                        BridgeDirection::to_ncis));
        } else if (src == ClassTag::rrs) {
          if (auto rc = validated(ClassTag::rrs)) return *rc;
          diff = difference(in, bridged(bridged(in, BridgeDirection::to_ncis),
                                        BridgeDirection::to_rrs));
        } else {
          mismatch("ncis or rrs");
        }
      } else {
        throw UsageError("unknown pair " + a.pair);
      }
    } catch (NotWellDefinedError const& e) {
      return report_failure(io, in, not_well_defined(in, e), "roundtrip");
    } catch (PreconditionError const& e) {
      io.out << "DIFFERENT " << e.what() << '\n';
      return kExitFailed;
    }
    if (diff) {
      io.out << "DIFFERENT " << *diff << '\n';
      return kExitFailed;
    }
    io.out << "IDENTICAL\n";
    return kExitOk;
  }

  // ---- con -----------------------------------------------------------

  struct ConArgs {
    std::string file;
    std::string report = "summary";
  };

  int do_con(Io io, ConArgs const& a) {
    Algebra const alg = load(a.file);
    try {
      require_total(alg);
    } catch (PreconditionError const& e) {
      throw UsageError(e.what());
    }
    ConLattice const    con = congruence_lattice(alg);
    MaltsevReport const rep = maltsev_report(con, alg.top());
    auto const tf = [](bool b) { return b ? "true" : "false"; };
    io.out << "congruences: " << con.size() << '\n'
           << "three_permutable: " << tf(rep.three_permutable) << '\n'
           << "con_distributive: " << tf(rep.con_distributive) << '\n'
           << "weakly_regular: " << tf(rep.weakly_regular) << '\n';
    if (alg.imp_table() && (alg.r_table() || alg.q_table())) {
      Report const terms = term_witness_check(alg);
      io.out << "terms: " << (terms ? "PASS" : fail_line(alg, terms)) << '\n';
    }
    if (a.report == "full") {
      for (std::size_t i = 0; i < con.size(); ++i) {
        io.out << i << ' ' << to_string(alg, con.congruences[i]) << '\n';
      }
    }
    return kExitOk;
  }

  // ---- search --------------------------------------------------------

  struct SearchArgs {
    std::string              cls;
    std::size_t              size = 0;
    bool                     upto = false;
    bool                     count = false;
    std::string              violate;
    bool                     free_imp = false;
    std::string              out_dir;
    std::optional<std::size_t> max_size;
    std::optional<std::size_t> limit;
    unsigned                 threads = 0;
  };

  int do_search(Io io, SearchArgs const& a) {
    SearchSpec spec;
    spec.class_tag = parse_class(a.cls);
    spec.size      = a.size;
    spec.upto      = a.upto;
    spec.free_imp  = a.free_imp;
    spec.limit     = a.limit;
    spec.threads   = a.threads;
    if (!a.violate.empty()) spec.violate = a.violate;
    if (a.max_size) {
      spec.max_size = *a.max_size;
      if (*a.max_size > kDefaultMaxSize) {
        io.err << "warning: sizes above " << kDefaultMaxSize
               << " grow factorially in time and memory\n";
      }
    }
    try {
      if (spec.violate && !a.count) {
        auto const found = find_counterexample(spec);
        if (!found) {
          io.out << "NONE\n";
          return kExitOk;
        }
        if (!a.out_dir.empty()) {
          std::filesystem::create_directories(a.out_dir);
          write_algebra_file(std::filesystem::path(a.out_dir) /
                                 (found->model.name() + ".alg"),
                             found->model);
        }
        io.out << serialize_algebra(found->model)
               << fail_line(found->model, found->report) << '\n';
        return kExitOk;
      }
      auto const models = enumerate_models(spec);
      if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        for (Algebra const& m : models) {
          write_algebra_file(std::filesystem::path(a.out_dir) / (m.name() + ".alg"), m);
        }
      }
      if (a.count) {
        io.out << models.size() << '\n';
      } else if (a.out_dir.empty()) {
        for (std::size_t i = 0; i < models.size(); ++i) {
          if (i > 0) io.out << '\n';
          io.out << serialize_algebra(models[i]);
        }
      } else {
        io.out << "wrote " << models.size() << " models to " << a.out_dir << '\n';
      }
    } catch (SizeCapError const& e) {
      throw UsageError(std::string(e.what()) +
                       " (raise it with --max-size or ORDALG_MAX_SIZE)");
    }
    return kExitOk;
  }

  // ---- tables --------------------------------------------------------

  int do_tables(Io io, std::string const& file) {
    io.out << render_tables(load(file));
    return kExitOk;
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  Io io{out, err};
  CLI::App app{"Finite implication semilattices and residuated structures",
               "ordalg"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "validate an algebra against a class");
  c->add_option("file", check.file, "algebra file")->required();
  c->add_option("--class", check.cls, "jsl|sectioned|ncis|srs|rrs|ialg|ralg");
  c->add_flag("--props", check.props, "also check the derived properties");
  c->add_flag("--subvariety", check.subvariety,
              "ralg: also require q(x, x -> y, y) = y");

  DeriveArgs derive;
  auto* d = app.add_subcommand("derive", "apply one of the maps between presentations");
  d->add_option("file", derive.file, "algebra file")->required();
  d->add_option("--map", derive.map, "I|S|R|A|J|B|Q")
      ->required()
      ->check(CLI::IsMember({"I", "S", "R", "A", "J", "B", "Q"}));
  d->add_option("-o,--output", derive.output, "write the result here");

  RoundtripArgs round;
  auto* r = app.add_subcommand("roundtrip", "apply a map and its inverse");
  r->add_option("file", round.file, "algebra file")->required();
  r->add_option("--pair", round.pair)
      ->required()
      ->check(CLI::IsMember(
          {"sectioned-ncis", "ncis-ialg", "srs-rrs", "rrs-ralg", "ncis-rrs"}));

  ConArgs con;
  auto* k = app.add_subcommand("con", "congruence lattice and Maltsev properties");
  k->add_option("file", con.file, "algebra file with total operations")->required();
  k->add_option("--report", con.report)->check(CLI::IsMember({"summary", "full"}));

  SearchArgs search;
  auto* s = app.add_subcommand("search", "enumerate models up to isomorphism");
  s->add_option("--class", search.cls)->required();
  s->add_option("--size", search.size)->required()->check(CLI::PositiveNumber);
  s->add_flag("--upto", search.upto, "all sizes from 1");
  s->add_flag("--count", search.count, "print the number of models only");
  s->add_option("--violate", search.violate, "property to find a counterexample to");
  s->add_flag("--free-imp", search.free_imp,
              "also enumerate implication tables not read off the sections");
  s->add_option("--out", search.out_dir, "write <class>_<size>_<index>.alg files");
  s->add_option("--max-size", search.max_size, "override the size cap");
  s->add_option("--limit", search.limit, "stop after this many models");
  s->add_option("--threads", search.threads, "worker threads (0 = all cores)");

  std::string tables_file;
  auto* t = app.add_subcommand("tables", "print the operation tables");
  t->add_option("file", tables_file, "algebra file")->required();

  std::vector<std::string> argv_store{"ordalg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& s_ : argv_store) argv.push_back(s_.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (CLI::CallForAllHelp const& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*c) return do_check(io, check);
    if (*d) return do_derive(io, derive);
    if (*r) return do_roundtrip(io, round);
    if (*k) return do_con(io, con);
    if (*s) return do_search(io, search);
    if (*t) return do_tables(io, tables_file);
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ordalg::cli
