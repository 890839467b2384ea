#include "ordalg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace ordalg {

Partition::Partition(std::vector<elem_t> class_of) : class_of_(std::move(class_of)) {
  // Relabel every class by its smallest member.
  std::vector<std::size_t> first(256, SIZE_MAX);
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    auto& f = first[class_of_[i]];
    if (f == SIZE_MAX) {
      f = i;
    }
    class_of_[i] = static_cast<elem_t>(f);
  }
}

Partition Partition::identity(std::size_t n) {
  std::vector<elem_t> c(n);
  std::iota(c.begin(), c.end(), elem_t(0));
  return Partition(std::move(c));
}

Partition Partition::full(std::size_t n) {
  return Partition(std::vector<elem_t>(n, 0));
}

std::size_t Partition::number_of_classes() const {
  std::size_t k = 0;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == i) {
      ++k;
    }
  }
  return k;
}

std::vector<std::vector<elem_t>> Partition::blocks() const {
  std::vector<std::vector<elem_t>> out;
  std::vector<std::size_t>         slot(class_of_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    elem_t const rep = class_of_[i];
    if (slot[rep] == SIZE_MAX) {
      slot[rep] = out.size();
      out.emplace_back();
    }
    out[slot[rep]].push_back(static_cast<elem_t>(i));
  }
  return out;
}

bool Partition::refines(Partition const& other) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.related(i, class_of_[i])) {
      return false;
    }
  }
  return true;
}

namespace {

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) {
      std::iota(parent_.begin(), parent_.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }
    bool unite(std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return false;
      }
      parent_[std::max(a, b)] = std::min(a, b);
      return true;
    }
    Partition partition() {
      std::vector<elem_t> c(parent_.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = static_cast<elem_t>(find(i));
      }
      return Partition(std::move(c));
    }

   private:
    std::vector<std::size_t> parent_;
  };

  using Relation = std::vector<std::vector<bool>>;

  Relation relation_of(Partition const& p) {
    std::size_t const n = p.size();
    Relation          rel(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        rel[x][y] = p.related(x, y);
      }
    }
    return rel;
  }

  Relation compose(Relation const& a, Relation const& b) {
    std::size_t const n = a.size();
    Relation          out(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!a[x][y]) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (b[y][z]) {
            out[x][z] = true;
          }
        }
      }
    }
    return out;
  }

}  // namespace

Partition partition_meet(Partition const& a, Partition const& b) {
  std::size_t const n = a.size();
  UnionFind         uf(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (a.related(x, y) && b.related(x, y)) {
        uf.unite(x, y);
      }
    }
  }
  return uf.partition();
}

Partition partition_join(Partition const& a, Partition const& b) {
  std::size_t const n = a.size();
  UnionFind         uf(n);
  for (std::size_t x = 0; x < n; ++x) {
    uf.unite(x, a.representative(x));
    uf.unite(x, b.representative(x));
  }
  return uf.partition();
}

std::string to_string(Algebra const& alg, Partition const& p) {
  std::string out;
  for (auto const& block : p.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += alg.label(block[i]);
    }
    out += '}';
  }
  return out;
}

void require_total(Algebra const& alg) {
  if (alg.meet_table() || alg.prod_table()) {
    throw PreconditionError(
        "congruence analysis needs total operations; drop the partial meet "
        "or product (derive --map A or --map B)");
  }
  std::size_t const n = alg.size();
  auto const check = [&](std::span<elem_t const> values, char const* name) {
    for (elem_t v : values) {
      if (v >= n) {
        throw PreconditionError(std::string(name) + " table is not total");
      }
    }
  };
  check(alg.join_table().values(), "join");
  if (alg.imp_table()) check(alg.imp_table()->values(), "imp");
  if (alg.r_table()) check(alg.r_table()->values(), "r");
  if (alg.q_table()) check(alg.q_table()->values(), "q");
}

Partition principal_congruence(Algebra const& alg, elem_t a, elem_t b) {
  require_total(alg);
  std::size_t const n = alg.size();
  UnionFind         uf(n);
  std::deque<std::pair<elem_t, elem_t>> work;

  auto const relate = [&](elem_t u, elem_t v) {
    if (uf.unite(u, v)) {
      work.emplace_back(u, v);
    }
  };
  std::vector<BinTable const*> binary{&alg.join_table()};
  if (alg.imp_table()) {
    binary.push_back(&*alg.imp_table());
  }
  std::vector<TernTable const*> ternary;
  if (alg.r_table()) {
    ternary.push_back(&*alg.r_table());
  }
  if (alg.q_table()) {
    ternary.push_back(&*alg.q_table());
  }

  relate(a, b);
  // Closing the generating pairs under the basic translations is enough:
  // every related pair is a chain of generating pairs.
  while (!work.empty()) {
    auto const [u, v] = work.front();
    work.pop_front();
    for (BinTable const* t : binary) {
      for (elem_t c = 0; c < n; ++c) {
        relate((*t)(u, c), (*t)(v, c));
        relate((*t)(c, u), (*t)(c, v));
      }
    }
    for (TernTable const* t : ternary) {
      for (elem_t c = 0; c < n; ++c) {
        for (elem_t d = 0; d < n; ++d) {
          relate((*t)(u, c, d), (*t)(v, c, d));
          relate((*t)(c, u, d), (*t)(c, v, d));
          relate((*t)(c, d, u), (*t)(c, d, v));
        }
      }
    }
  }
  return uf.partition();
}

ConLattice congruence_lattice(Algebra const& alg) {
  require_total(alg);
  std::size_t const      n = alg.size();
  std::set<Partition>    seen;
  std::vector<Partition> all;
  auto const add = [&](Partition p) {
    if (seen.insert(p).second) {
      all.push_back(std::move(p));
    }
  };
  add(Partition::identity(n));
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t b = a + 1; b < n; ++b) {
      add(principal_congruence(alg, a, b));
    }
  }
  // Every congruence is a join of principal ones.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(partition_join(all[i], all[j]));
    }
  }
  std::sort(all.begin(), all.end(), [](Partition const& p, Partition const& q) {
    auto const kp = p.number_of_classes();
    auto const kq = q.number_of_classes();
    if (kp != kq) {
      return kp > kq;
    }
    return p.class_of() < q.class_of();
  });
  ConLattice con;
  con.congruences = std::move(all);
  std::size_t const m = con.congruences.size();
  con.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      con.leq[i][j] = con.congruences[i].refines(con.congruences[j]);
    }
  }
  return con;
}

MaltsevReport maltsev_report(ConLattice const& con, elem_t top) {
  MaltsevReport     rep;
  auto const&       cs = con.congruences;
  std::size_t const m  = cs.size();

  std::vector<Relation> rel;
  rel.reserve(m);
  for (auto const& p : cs) {
    rel.push_back(relation_of(p));
  }
  for (std::size_t i = 0; i < m && rep.three_permutable; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto const lhs = compose(compose(rel[i], rel[j]), rel[i]);
      auto const rhs = compose(compose(rel[j], rel[i]), rel[j]);
      if (lhs != rhs) {
        rep.three_permutable      = false;
        rep.permutability_witness = std::make_pair(i, j);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < m && rep.con_distributive; ++i) {
    for (std::size_t j = 0; j < m && rep.con_distributive; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        auto const lhs = partition_meet(cs[i], partition_join(cs[j], cs[k]));
        auto const rhs = partition_join(partition_meet(cs[i], cs[j]),
                                        partition_meet(cs[i], cs[k]));
        if (lhs != rhs) {
          rep.con_distributive       = false;
          rep.distributivity_witness = std::vector<std::size_t>{i, j, k};
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < m && rep.weakly_regular; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool same = true;
      for (std::size_t x = 0; x < cs[i].size(); ++x) {
        if (cs[i].related(x, top) != cs[j].related(x, top)) {
          same = false;
          break;
        }
      }
      if (same) {
        rep.weakly_regular     = false;
        rep.regularity_witness = std::make_pair(i, j);
        break;
      }
    }
  }
  return rep;
}

MaltsevReport maltsev_report(Algebra const& alg) {
  return maltsev_report(congruence_lattice(alg), alg.top());
}

Report term_witness_check(Algebra const& alg) {
  require_total(alg);
  if (!alg.imp_table() || (!alg.r_table() && !alg.q_table())) {
    return Report::fail("signature", {}, "-", "-",
                        "needs imp and a ternary r or q table");
  }
  bool const        use_r = alg.r_table().has_value();
  std::size_t const n     = alg.size();
  elem_t const      top   = alg.top();
  auto const        L     = [&](elem_t e) { return alg.label(e); };
  auto const        I     = [&](elem_t x, elem_t y) { return alg.imp(x, y); };
  auto const        T     = [&](elem_t x, elem_t y, elem_t z) {
    return use_r ? alg.r(x, y, z) : alg.q(x, y, z);
  };

  bool scheme_a = true;
  if (!use_r) {
    for (elem_t x = 0; x < n && scheme_a; ++x) {
      for (elem_t y = 0; y < n; ++y) {
        if (T(x, I(x, y), y) != y) {
          scheme_a = false;
          break;
        }
      }
    }
  }

  if (scheme_a) {
    auto const m1 = [&](elem_t x, elem_t y, elem_t z) { return T(z, I(y, x), x); };
    auto const m2 = [&](elem_t x, elem_t y, elem_t z) { return T(x, I(y, z), z); };
    for (elem_t x = 0; x < n; ++x) {
      for (elem_t y = 0; y < n; ++y) {
        if (m1(x, y, y) != x) {
          return Report::fail("maltsev-1", {x, y}, L(m1(x, y, y)), L(x));
        }
        if (m1(x, x, y) != m2(x, y, y)) {
          return Report::fail("maltsev-2", {x, y}, L(m1(x, x, y)),
                              L(m2(x, y, y)));
        }
        if (m2(x, x, y) != y) {
          return Report::fail("maltsev-3", {x, y}, L(m2(x, x, y)), L(y));
        }
      }
    }
  }
  {
    auto const j1 = [&](elem_t x, elem_t y, elem_t z) { return T(z, y, x); };
    auto const j2 = [&](elem_t x, elem_t y, elem_t z) { return T(x, I(y, z), z); };
    for (elem_t x = 0; x < n; ++x) {
      for (elem_t y = 0; y < n; ++y) {
        if (x != j1(x, x, y)) {
          return Report::fail("jonsson-0", {x, y}, L(x), L(j1(x, x, y)));
        }
        if (j1(x, y, y) != j2(x, y, y)) {
          return Report::fail("jonsson-1", {x, y}, L(j1(x, y, y)),
                              L(j2(x, y, y)));
        }
        if (j2(x, x, y) != y) {
          return Report::fail("jonsson-2", {x, y}, L(j2(x, x, y)), L(y));
        }
        if (j1(x, y, x) != x) {
          return Report::fail("jonsson-t1", {x, y}, L(j1(x, y, x)), L(x));
        }
        if (j2(x, y, x) != x) {
          return Report::fail("jonsson-t2", {x, y}, L(j2(x, y, x)), L(x));
        }
      }
    }
  }
  for (elem_t x = 0; x < n; ++x) {
    for (elem_t y = 0; y < n; ++y) {
      bool const both_one = I(x, y) == top && I(y, x) == top;
      if (both_one != (x == y)) {
        return Report::fail("weak-regularity", {x, y},
                            both_one ? "true" : "false",
                            x == y ? "true" : "false");
      }
    }
  }
  return Report::pass();
}

}  // namespace ordalg
