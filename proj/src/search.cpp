#include "ordalg/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "ordalg/classes.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/implication.hpp"
#include "ordalg/order.hpp"
#include "ordalg/residuated.hpp"
#include "ordalg/sectioned.hpp"
#include "ordalg/varieties.hpp"

namespace ordalg {

namespace {

  // Upper bound on the number of tables tried for one semilattice by the
  // free implication search.
  constexpr std::size_t kFreeImpLimit = std::size_t(1) << 24;

  template <typename F>
  void parallel_for(std::size_t count, unsigned threads, F&& body) {
    unsigned t = threads != 0 ? threads : std::thread::hardware_concurrency();
    t          = std::max(1u, t);
    if (t == 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    t = static_cast<unsigned>(std::min<std::size_t>(t, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
            next = count;
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  // sigma[i] is the old element placed at position i.
  using Perm = std::vector<elem_t>;

  Perm inverse(Perm const& sigma) {
    Perm inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      inv[sigma[i]] = static_cast<elem_t>(i);
    }
    return inv;
  }

  elem_t image(Perm const& inv, elem_t v) { return v == UNDEF ? UNDEF : inv[v]; }

  void append_binary(std::vector<elem_t>& key, std::optional<BinTable> const& t,
                     Perm const& sigma, Perm const& inv) {
    key.push_back(t ? 1 : 0);
    if (!t) return;
    std::size_t const n = sigma.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        key.push_back(image(inv, (*t)(sigma[i], sigma[j])));
      }
    }
  }

  void append_ternary(std::vector<elem_t>& key,
                      std::optional<TernTable> const& t, Perm const& sigma,
                      Perm const& inv) {
    key.push_back(t ? 1 : 0);
    if (!t) return;
    std::size_t const n = sigma.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          key.push_back(image(inv, (*t)(sigma[i], sigma[j], sigma[k])));
        }
      }
    }
  }

  std::vector<elem_t> full_key(Algebra const& alg, Perm const& sigma) {
    Perm const          inv = inverse(sigma);
    std::vector<elem_t> key;
    append_binary(key, alg.join_table(), sigma, inv);
    append_binary(key, alg.meet_table(), sigma, inv);
    append_binary(key, alg.imp_table(), sigma, inv);
    append_binary(key, alg.prod_table(), sigma, inv);
    append_ternary(key, alg.r_table(), sigma, inv);
    append_ternary(key, alg.q_table(), sigma, inv);
    return key;
  }

  struct JoinMinimum {
    std::vector<elem_t> join_key;
    std::vector<Perm>   perms;  // every permutation attaining it
  };

  // Lexicographically least join table over all permutations fixing the
  // top (which goes last), with early exit on the first larger entry.
  JoinMinimum minimise_join(Algebra const& alg) {
    std::size_t const n   = alg.size();
    elem_t const      top = alg.top();
    Perm              others;
    for (std::size_t x = 0; x < n; ++x) {
      if (x != top) others.push_back(static_cast<elem_t>(x));
    }
    JoinMinimum         best;
    std::vector<elem_t> cur(n * n);
    Perm                sigma(n);
    Perm                inv(n);
    do {
      std::copy(others.begin(), others.end(), sigma.begin());
      sigma[n - 1] = top;
      for (std::size_t i = 0; i < n; ++i) {
        inv[sigma[i]] = static_cast<elem_t>(i);
      }
      int cmp = best.perms.empty() ? -1 : 0;
      for (std::size_t i = 0; i < n && cmp <= 0; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          elem_t const v = image(inv, alg.join(sigma[i], sigma[j]));
          cur[i * n + j] = v;
          if (cmp == 0) {
            elem_t const b = best.join_key[i * n + j];
            if (v < b) {
              cmp = -1;
            } else if (v > b) {
              cmp = 1;
              break;
            }
          }
        }
      }
      if (cmp < 0) {
        best.join_key = cur;
        best.perms.assign(1, sigma);
      } else if (cmp == 0) {
        best.perms.push_back(sigma);
      }
    } while (std::next_permutation(others.begin(), others.end()));
    return best;
  }

  Perm canonical_perm(Algebra const& alg) {
    JoinMinimum const m = minimise_join(alg);
    if (m.perms.size() == 1) {
      return m.perms.front();
    }
    Perm                best;
    std::vector<elem_t> best_key;
    for (Perm const& sigma : m.perms) {
      auto key = full_key(alg, sigma);
      if (best.empty() || key < best_key) {
        best     = sigma;
        best_key = std::move(key);
      }
    }
    return best;
  }

  std::optional<BinTable> permute(std::optional<BinTable> const& t,
                                  Perm const& sigma, Perm const& inv) {
    if (!t) return std::nullopt;
    std::size_t const n = sigma.size();
    BinTable          out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.set(i, j, image(inv, (*t)(sigma[i], sigma[j])));
      }
    }
    return out;
  }

  std::optional<TernTable> permute(std::optional<TernTable> const& t,
                                   Perm const& sigma, Perm const& inv) {
    if (!t) return std::nullopt;
    std::size_t const n = sigma.size();
    TernTable         out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          out.set(i, j, k, image(inv, (*t)(sigma[i], sigma[j], sigma[k])));
        }
      }
    }
    return out;
  }

  Algebra apply_perm(Algebra const& alg, Perm const& sigma) {
    Perm const inv = inverse(sigma);
    Universe   u;
    for (elem_t old : sigma) {
      u.labels.push_back(alg.label(old));
    }
    u.top = inv[alg.top()];
    Algebra out(std::move(u), *permute(std::optional(alg.join_table()), sigma, inv));
    return out.with_name(alg.name())
        .with_class(alg.class_tag())
        .with_meet(permute(alg.meet_table(), sigma, inv))
        .with_imp(permute(alg.imp_table(), sigma, inv))
        .with_prod(permute(alg.prod_table(), sigma, inv))
        .with_r(permute(alg.r_table(), sigma, inv))
        .with_q(permute(alg.q_table(), sigma, inv));
  }

  std::vector<std::string> positional_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    }
    labels.emplace_back("1");
    return labels;
  }

  Algebra relabel_positional(Algebra const& alg) {
    Universe u{positional_labels(alg.size()), alg.top()};
    return Algebra(std::move(u), alg.join_table())
        .with_name(alg.name())
        .with_class(alg.class_tag())
        .with_meet(alg.meet_table())
        .with_imp(alg.imp_table())
        .with_prod(alg.prod_table())
        .with_r(alg.r_table())
        .with_q(alg.q_table());
  }

  Algebra jsl_from_key(std::vector<elem_t> const& join_key, std::size_t n) {
    BinTable join(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        join.set(i, j, join_key[i * n + j]);
      }
    }
    Universe u{positional_labels(n), static_cast<elem_t>(n - 1)};
    return Algebra(std::move(u), std::move(join)).with_class(ClassTag::jsl);
  }

  // All semilattices obtained by adding one new minimal element below an
  // up-closed set U (containing the top) such that every x has a least
  // upper bound in U; their canonical join keys.
  std::set<std::vector<elem_t>> extensions(Algebra const& parent) {
    std::size_t const m = parent.size();
    std::size_t const n = m + 1;
    std::set<std::vector<elem_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
      auto const in = [&](std::size_t x) { return ((mask >> x) & 1) != 0; };
      if (!in(parent.top())) continue;
      bool ok = true;
      for (std::size_t x = 0; x < m && ok; ++x) {
        if (!in(x)) continue;
        for (std::size_t y = 0; y < m; ++y) {
          if (parent.leq(x, y) && !in(y)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      std::vector<elem_t> least(m, UNDEF);
      for (std::size_t x = 0; x < m && ok; ++x) {
        for (std::size_t s = 0; s < m; ++s) {
          if (!in(s) || !parent.leq(x, s)) continue;
          bool is_least = true;
          for (std::size_t t = 0; t < m; ++t) {
            if (in(t) && parent.leq(x, t) && !parent.leq(s, t)) {
              is_least = false;
              break;
            }
          }
          if (is_least) {
            least[x] = static_cast<elem_t>(s);
            break;
          }
        }
        ok = least[x] != UNDEF;
      }
      if (!ok) continue;
      BinTable join(n);
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          join.set(x, y, parent.join(x, y));
        }
        join.set(x, m, least[x]);
        join.set(m, x, least[x]);
      }
      join.set(m, m, static_cast<elem_t>(m));
      Universe u{std::vector<std::string>(n), parent.top()};
      out.insert(minimise_join(Algebra(std::move(u), std::move(join))).join_key);
    }
    return out;
  }

  std::vector<Algebra> jsl_uncached(std::size_t n, unsigned threads) {
    if (n == 1) {
      return {jsl_from_key({0}, 1)};
    }
    auto const parents = enumerate_jsl(n - 1, threads);
    std::vector<std::set<std::vector<elem_t>>> found(parents.size());
    parallel_for(parents.size(), threads,
                 [&](std::size_t i) { found[i] = extensions(parents[i]); });
    std::set<std::vector<elem_t>> keys;
    for (auto& f : found) {
      keys.merge(f);
    }
    std::vector<Algebra> out;
    for (auto const& key : keys) {
      out.push_back(jsl_from_key(key, n));
    }
    return out;
  }

  // Odometer over per-cell candidate lists.
  template <typename F>
  void for_each_choice(std::vector<std::vector<elem_t>> const& candidates,
                       F&& visit) {
    for (auto const& c : candidates) {
      if (c.empty()) return;
    }
    std::vector<std::size_t> idx(candidates.size(), 0);
    std::vector<elem_t>      choice(candidates.size());
    while (true) {
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        choice[k] = candidates[k][idx[k]];
      }
      visit(choice);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == candidates[k].size()) {
        idx[k] = 0;
        ++k;
      }
      if (k == idx.size()) return;
    }
  }

  std::size_t product_size(std::vector<std::vector<elem_t>> const& candidates,
                           std::size_t cap) {
    std::size_t total = 1;
    for (auto const& c : candidates) {
      if (c.empty()) return 0;
      if (total > cap / c.size()) return cap + 1;
      total *= c.size();
    }
    return total;
  }

  using Cell = std::pair<elem_t, elem_t>;

  // The cells x -> y with y <= x; (16) determines every other entry.
  std::vector<Cell> free_imp_cells(Algebra const& alg) {
    std::vector<Cell> cells;
    for (std::size_t x = 0; x < alg.size(); ++x) {
      for (std::size_t y = 0; y < alg.size(); ++y) {
        if (alg.leq(y, x)) cells.emplace_back(elem_t(x), elem_t(y));
      }
    }
    return cells;
  }

  BinTable imp_from_cells(Algebra const& alg, std::vector<Cell> const& cells,
                          std::vector<elem_t> const& values) {
    std::size_t const n = alg.size();
    BinTable          lower(n);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      lower.set(cells[k].first, cells[k].second, values[k]);
    }
    BinTable imp(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        imp.set(x, y, lower(alg.join(x, y), y));
      }
    }
    return imp;
  }

  // Product tables on bounded pairs with every value between the common
  // lower bounds and below both factors (the latter follows from (11) and
  // (14)), symmetric by (12).
  std::vector<BinTable> product_candidates(Algebra const& alg) {
    std::size_t const                n = alg.size();
    std::vector<Cell>                cells;
    std::vector<std::vector<elem_t>> candidates;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        auto const lower = common_lower_bounds(alg, x, y);
        if (lower.empty()) continue;
        std::vector<elem_t> c;
        for (elem_t v : lower) {
          bool const above_all = std::all_of(lower.begin(), lower.end(),
                                             [&](elem_t z) { return alg.leq(z, v); });
          if (above_all) c.push_back(v);
        }
        cells.emplace_back(elem_t(x), elem_t(y));
        candidates.push_back(std::move(c));
      }
    }
    std::vector<BinTable> out;
    if (product_size(candidates, kFreeImpLimit) > kFreeImpLimit) {
      throw Error("too many product tables to enumerate");
    }
    for_each_choice(candidates, [&](std::vector<elem_t> const& choice) {
      BinTable prod(n);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        prod.set(cells[k].first, cells[k].second, choice[k]);
        prod.set(cells[k].second, cells[k].first, choice[k]);
      }
      out.push_back(std::move(prod));
    });
    return out;
  }

  // y -> z as the greatest u >= z with u . (y v z) <= z, when it exists.
  std::optional<BinTable> residual(Algebra const& alg, BinTable const& prod) {
    std::size_t const n = alg.size();
    BinTable          imp(n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        elem_t const        yz = alg.join(y, z);
        std::vector<elem_t> good;
        for (std::size_t u = 0; u < n; ++u) {
          if (alg.leq(z, u) && alg.leq(prod(u, yz), z)) {
            good.push_back(static_cast<elem_t>(u));
          }
        }
        auto const greatest = std::find_if(good.begin(), good.end(), [&](elem_t g) {
          return std::all_of(good.begin(), good.end(),
                             [&](elem_t h) { return alg.leq(h, g); });
        });
        if (greatest == good.end()) return std::nullopt;
        imp.set(y, z, *greatest);
      }
    }
    return imp;
  }

  std::vector<Algebra> ncis_models(Algebra const& jsl, bool free_imp) {
    if (!free_imp) {
      if (!validate_sectioned(jsl)) return {};
      return {derive_implication(jsl.bare())};
    }
    BinTable meet;
    try {
      meet = meet_table_from_order(jsl);
    } catch (MeetNotUniqueError const&) {
      return {};
    }
    Algebra const base  = jsl.bare().with_meet(meet).with_class(ClassTag::ncis);
    auto const    cells = free_imp_cells(jsl);
    std::vector<std::vector<elem_t>> candidates;
    for (auto [x, y] : cells) {
      std::vector<elem_t> c;
      for (std::size_t v = 0; v < jsl.size(); ++v) {
        // (1) y <= x -> y and (2) x ^ (x -> y) = y for y <= x.
        if (jsl.leq(y, v) && meet(x, v) == y) c.push_back(static_cast<elem_t>(v));
      }
      candidates.push_back(std::move(c));
    }
    if (product_size(candidates, kFreeImpLimit) > kFreeImpLimit) {
      throw Error("too many implication tables to enumerate");
    }
    std::vector<Algebra> out;
    for_each_choice(candidates, [&](std::vector<elem_t> const& choice) {
      Algebra a = base.with_imp(imp_from_cells(jsl, cells, choice));
      if (validate_ncis(a)) out.push_back(std::move(a));
    });
    return out;
  }

  std::vector<Algebra> rrs_models(Algebra const& jsl, bool free_imp) {
    std::vector<Algebra> out;
    auto const           cells = free_imp_cells(jsl);
    for (BinTable const& prod : product_candidates(jsl)) {
      Algebra const base = jsl.bare().with_prod(prod).with_class(ClassTag::rrs);
      if (!free_imp) {
        if (auto imp = residual(jsl, prod)) {
          Algebra a = base.with_imp(*imp);
          if (validate_rrs(a)) out.push_back(std::move(a));
        }
        continue;
      }
      std::vector<std::vector<elem_t>> candidates;
      for (auto [x, y] : cells) {
        std::vector<elem_t> c;
        for (std::size_t v = 0; v < jsl.size(); ++v) {
          // y <= x -> y and (x v y) . (x -> y) <= y hold in every model.
          if (jsl.leq(y, v) && jsl.leq(prod(x, v), y)) {
            c.push_back(static_cast<elem_t>(v));
          }
        }
        candidates.push_back(std::move(c));
      }
      if (product_size(candidates, kFreeImpLimit) > kFreeImpLimit) {
        throw Error("too many implication tables to enumerate");
      }
      for_each_choice(candidates, [&](std::vector<elem_t> const& choice) {
        Algebra a = base.with_imp(imp_from_cells(jsl, cells, choice));
        if (validate_rrs(a)) out.push_back(std::move(a));
      });
    }
    return out;
  }

  std::vector<Algebra> models_over(Algebra const& jsl, ClassTag tag,
                                   bool free_imp) {
    switch (tag) {
      case ClassTag::jsl: return {jsl};
      case ClassTag::sectioned:
        if (!validate_sectioned(jsl)) return {};
        return {make_sectioned(jsl).alg};
      case ClassTag::ncis: return ncis_models(jsl, free_imp);
      case ClassTag::ialg: {
        std::vector<Algebra> out;
        for (auto const& m : ncis_models(jsl, free_imp)) {
          out.push_back(ialgebra_from_ncis(m));
        }
        return out;
      }
      case ClassTag::rrs: return rrs_models(jsl, free_imp);
      case ClassTag::srs: {
        std::vector<Algebra> out;
        for (auto const& m : rrs_models(jsl, free_imp)) {
          out.push_back(m.with_class(ClassTag::srs));
        }
        return out;
      }
      case ClassTag::ralg: {
        std::vector<Algebra> out;
        for (auto const& m : rrs_models(jsl, free_imp)) {
          out.push_back(ralgebra_from_rrs(m));
        }
        return out;
      }
      case ClassTag::none: break;
    }
    throw Error("no class given");
  }

  std::vector<Algebra> models_of_size(ClassTag tag, std::size_t n,
                                      bool free_imp, unsigned threads) {
    auto const                        jsls = enumerate_jsl(n, threads);
    std::vector<std::vector<Algebra>> per(jsls.size());
    std::vector<std::vector<std::vector<elem_t>>> keys(jsls.size());
    parallel_for(jsls.size(), threads, [&](std::size_t i) {
      for (Algebra const& m : models_over(jsls[i], tag, free_imp)) {
        Perm const sigma = canonical_perm(m);
        per[i].push_back(relabel_positional(apply_perm(m, sigma)));
        keys[i].push_back(full_key(m, sigma));
      }
    });
    std::map<std::vector<elem_t>, Algebra> sorted;
    for (std::size_t i = 0; i < jsls.size(); ++i) {
      for (std::size_t k = 0; k < per[i].size(); ++k) {
        sorted.emplace(std::move(keys[i][k]), std::move(per[i][k]));
      }
    }
    std::vector<Algebra> out;
    std::string const    prefix =
        std::string(to_string(tag)) + "_" + std::to_string(n) + "_";
    for (auto& [key, alg] : sorted) {
      out.push_back(alg.with_name(prefix + std::to_string(out.size() + 1)));
    }
    return out;
  }

  void check_spec(SearchSpec const& spec) {
    if (spec.class_tag == ClassTag::none) {
      throw Error("no class given");
    }
    if (spec.size == 0) {
      throw Error("size must be positive");
    }
    std::size_t const cap = spec.max_size.value_or(size_cap());
    if (spec.size > cap) {
      throw SizeCapError("size " + std::to_string(spec.size) +
                         " exceeds the cap of " + std::to_string(cap));
    }
    if (spec.size > 64) {
      throw SizeCapError("sizes above 64 are not supported");
    }
    if (spec.violate) {
      auto const& names = property_names();
      if (std::find(names.begin(), names.end(), *spec.violate) == names.end()) {
        throw Error("unknown property " + *spec.violate);
      }
    }
  }

  Report shape_property(Algebra const& alg, bool want_distributive) {
    std::string const name =
        want_distributive ? "section-distributive" : "section-modular";
    for (std::size_t base = 0; base < alg.size(); ++base) {
      if (!section_report(alg, static_cast<elem_t>(base)).is_lattice) {
        throw PreconditionError(name + " needs every section to be a lattice");
      }
      SectionShape const s = section_shape_report(alg, static_cast<elem_t>(base));
      bool const ok = want_distributive ? s.distributive : s.modular;
      if (!ok) {
        std::vector<elem_t> witness;
        if (s.witness) witness.assign(s.witness->begin(), s.witness->end());
        return Report::fail(name, witness, "false", "true",
                            "section " + alg.label(base) + " contains " +
                                s.witness_kind);
      }
    }
    return Report::pass();
  }

  Report maltsev_property(Algebra const& alg, std::string const& name) {
    MaltsevReport const rep = maltsev_report(as_total(alg));
    bool const ok = name == "con-distributive"   ? rep.con_distributive
                    : name == "three-permutable" ? rep.three_permutable
                                                 : rep.weakly_regular;
    return ok ? Report::pass() : Report::fail(name, {}, "false", "true");
  }

}  // namespace

std::size_t size_cap() {
  if (char const* env = std::getenv("ORDALG_MAX_SIZE")) {
    std::string_view const text(env);
    std::size_t            value = 0;
    auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      return value;
    }
  }
  return kDefaultMaxSize;
}

Algebra canonical_form(Algebra const& alg) {
  return apply_perm(alg, canonical_perm(alg));
}

std::vector<elem_t> canonical_key(Algebra const& alg) {
  return full_key(alg, canonical_perm(alg));
}

bool isomorphic(Algebra const& a, Algebra const& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

std::vector<Algebra> enumerate_jsl(std::size_t n, unsigned threads) {
  static std::mutex                                cache_mutex;
  static std::map<std::size_t, std::vector<Algebra>> cache;
  if (n == 0 || n > 64) {
    throw Error("size must be between 1 and 64");
  }
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto result = jsl_uncached(n, threads);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::vector<Algebra> enumerate_models(SearchSpec const& spec) {
  check_spec(spec);
  std::vector<Algebra> out;
  for (std::size_t n = spec.upto ? 1 : spec.size; n <= spec.size; ++n) {
    for (Algebra& m : models_of_size(spec.class_tag, n, spec.free_imp, spec.threads)) {
      if (spec.limit && out.size() >= *spec.limit) return out;
      if (spec.violate && check_property(m, *spec.violate)) continue;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::size_t count_models(SearchSpec const& spec) {
  return enumerate_models(spec).size();
}

std::vector<std::string> const& property_names() {
  static std::vector<std::string> const names{
      "section-modular",  "section-distributive", "divisible",
      "con-distributive", "three-permutable",     "weakly-regular",
      "ncis-properties",  "rrs-properties"};
  return names;
}

Report check_property(Algebra const& alg, std::string_view property) {
  std::string const name(property);
  if (name == "section-modular") return shape_property(alg, false);
  if (name == "section-distributive") return shape_property(alg, true);
  if (name == "divisible") return check_divisible(as_rrs(alg));
  if (name == "con-distributive" || name == "three-permutable" ||
      name == "weakly-regular") {
    return maltsev_property(alg, name);
  }
  if (name == "ncis-properties") return check_ncis_properties(as_ncis(alg));
  if (name == "rrs-properties") return check_rrs_properties(as_rrs(alg));
  throw Error("unknown property " + name);
}

std::optional<Counterexample> find_counterexample(SearchSpec const& spec) {
  if (!spec.violate) {
    throw Error("no property to violate");
  }
  check_spec(spec);
  for (std::size_t n = spec.upto ? 1 : spec.size; n <= spec.size; ++n) {
    for (Algebra const& m :
         models_of_size(spec.class_tag, n, spec.free_imp, spec.threads)) {
      Report r = check_property(m, *spec.violate);
      if (!r) return Counterexample{m, std::move(r)};
    }
  }
  return std::nullopt;
}

std::size_t for_each_rrs_precandidate(
    std::size_t n, std::function<void(Algebra const&)> const& visit,
    std::size_t exhaustive_limit) {
  std::size_t visited = 0;
  for (Algebra const& jsl : enumerate_jsl(n)) {
    auto const cells = free_imp_cells(jsl);
    for (BinTable const& prod : product_candidates(jsl)) {
      Algebra const base = jsl.bare().with_prod(prod).with_class(ClassTag::rrs);
      BinTable      top_imp(n, jsl.top());
      if (!validate_rrs_preconditions(base.with_imp(top_imp))) continue;

      auto const emit = [&](std::vector<elem_t> const& values) {
        Algebra const a = base.with_imp(imp_from_cells(jsl, cells, values));
        if (validate_rrs_preconditions(a)) {
          ++visited;
          visit(a);
        }
      };
      std::vector<std::vector<elem_t>> all_values(cells.size());
      for (auto& c : all_values) {
        for (std::size_t v = 0; v < n; ++v) c.push_back(static_cast<elem_t>(v));
      }
      if (product_size(all_values, exhaustive_limit) <= exhaustive_limit) {
        for_each_choice(all_values, emit);
        continue;
      }
      std::vector<std::vector<elem_t>> bases;
      if (auto imp = residual(jsl, prod)) {
        std::vector<elem_t> v;
        for (auto [x, y] : cells) v.push_back((*imp)(x, y));
        bases.push_back(std::move(v));
      }
      {
        std::vector<elem_t> v;
        for (auto [x, y] : cells) v.push_back(x == y ? jsl.top() : y);
        bases.push_back(std::move(v));
      }
      std::set<std::vector<elem_t>> seen;
      for (auto const& b : bases) {
        seen.insert(b);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          for (std::size_t vi = 0; vi < n; ++vi) {
            auto single = b;
            single[i]   = static_cast<elem_t>(vi);
            seen.insert(single);
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
              for (std::size_t vj = 0; vj < n; ++vj) {
                auto dbl = single;
                dbl[j]   = static_cast<elem_t>(vj);
                seen.insert(std::move(dbl));
              }
            }
          }
        }
      }
      for (auto const& values : seen) emit(values);
    }
  }
  return visited;
}

}  // namespace ordalg
