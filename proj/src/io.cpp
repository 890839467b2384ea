#include "ordalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "ordalg/order.hpp"

namespace ordalg {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& message)
    : Error("line " + std::to_string(line) + ", column "
            + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

  struct Token {
    std::string text;
    std::size_t column;
  };

  struct Line {
    std::size_t        number;
    std::vector<Token> tokens;
  };

  std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t       number = 0;
    std::size_t       start  = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view raw = text.substr(start, end - start);
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      Line        line{number, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size()
               && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
          ++i;
        }
        std::size_t const b = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t'
               && raw[i] != '\r') {
          ++i;
        }
        if (i > b) {
          line.tokens.push_back({std::string(raw.substr(b, i - b)), b + 1});
        }
      }
      if (!line.tokens.empty()) {
        lines.push_back(std::move(line));
      }
      if (end == text.size()) {
        break;
      }
      start = end + 1;
    }
    return lines;
  }

  bool is_keyword(std::string const& t) {
    return t == "algebra" || t == "name:" || t == "class:" || t == "elements:"
           || t == "order:" || t == "op" || t == "end";
  }

  struct Pos {
    std::size_t line   = 0;
    std::size_t column = 0;
  };

  struct BinSource {
    BinTable         table;
    std::vector<Pos> pos;  // per entry, row-major
    Pos              header;
  };

  struct TernSource {
    TernTable table;
    Pos       header;
  };

  class Parser {
   public:
    Parser(std::string_view text, ParseOptions options)
        : lines_(tokenize(text)), options_(options) {}

    Algebra run();

   private:
    [[noreturn]] void fail(Pos p, std::string const& msg) const {
      throw ParseError(p.line, p.column, msg);
    }
    [[noreturn]] void fail(Line const& l, Token const& t,
                           std::string const& msg) const {
      throw ParseError(l.number, t.column, msg);
    }

    Pos at(Line const& l, std::size_t k = 0) const {
      return {l.number, l.tokens[k].column};
    }

    elem_t resolve(Line const& l, Token const& t, bool allow_undef) const;
    void   parse_elements(Line const& l);
    void   parse_order_lines();
    BinSource  parse_binary(Line const& header, bool partial);
    TernSource parse_ternary(Line const& header);

    std::string const& lbl(std::size_t i) const { return labels_[i]; }
    std::string        pair(std::size_t a, std::size_t b) const {
      return "(" + lbl(a) + "," + lbl(b) + ")";
    }

    Algebra assemble();

    std::vector<Line> lines_;
    std::size_t       cursor_ = 0;
    ParseOptions      options_;

    std::optional<std::string>              name_;
    std::optional<ClassTag>                 class_tag_;
    std::vector<std::string>                labels_;
    std::unordered_map<std::string, elem_t> index_;
    Pos                                     elements_pos_;

    bool                                        has_order_ = false;
    Pos                                         order_pos_;
    std::vector<std::pair<elem_t, elem_t>>      order_pairs_;
    std::optional<BinSource>                    join_;
    std::optional<BinSource>                    meet_;
    std::optional<BinSource>                    imp_;
    std::optional<BinSource>                    prod_;
    std::optional<TernSource>                   r_;
    std::optional<TernSource>                   q_;
  };

  elem_t Parser::resolve(Line const& l, Token const& t, bool allow_undef) const {
    if (t.text == "-") {
      if (!allow_undef) {
        fail(l, t, "\"-\" is only allowed in a partial table");
      }
      return UNDEF;
    }
    auto it = index_.find(t.text);
    if (it == index_.end()) {
      fail(l, t, "unknown element \"" + t.text + "\"");
    }
    return it->second;
  }

  void Parser::parse_elements(Line const& l) {
    if (!labels_.empty()) {
      fail(at(l), "duplicate elements line");
    }
    if (l.tokens.size() < 2) {
      fail(at(l), "elements line lists no elements");
    }
    if (l.tokens.size() - 1 > kMaxElements) {
      fail(at(l), "too many elements");
    }
    elements_pos_ = at(l);
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      Token const& t = l.tokens[k];
      if (t.text == "-") {
        fail(l, t, "\"-\" is reserved and cannot be an element label");
      }
      if (is_keyword(t.text) || t.text.back() == ':') {
        fail(l, t, "\"" + t.text + "\" is reserved and cannot be an element label");
      }
      if (index_.count(t.text) != 0) {
        fail(l, t, "duplicate label \"" + t.text + "\"");
      }
      index_.emplace(t.text, static_cast<elem_t>(labels_.size()));
      labels_.push_back(t.text);
    }
  }

  void Parser::parse_order_lines() {
    while (cursor_ < lines_.size()
           && !is_keyword(lines_[cursor_].tokens[0].text)) {
      Line const& l = lines_[cursor_++];
      auto const& ts = l.tokens;
      if (ts.size() < 3 || ts.size() % 2 == 0) {
        fail(at(l), "expected an order line of the form \"x < y\"");
      }
      for (std::size_t k = 1; k < ts.size(); k += 2) {
        if (ts[k].text != "<") {
          fail(l, ts[k], "expected \"<\"");
        }
      }
      for (std::size_t k = 0; k + 2 < ts.size(); k += 2) {
        elem_t const a = resolve(l, ts[k], false);
        elem_t const b = resolve(l, ts[k + 2], false);
        order_pairs_.emplace_back(a, b);
      }
    }
  }

  BinSource Parser::parse_binary(Line const& header, bool partial) {
    std::size_t const n = labels_.size();
    BinSource         src{BinTable(n), std::vector<Pos>(n * n), at(header)};
    for (std::size_t i = 0; i < n; ++i) {
      if (cursor_ >= lines_.size()
          || is_keyword(lines_[cursor_].tokens[0].text)) {
        Pos p = cursor_ < lines_.size() ? at(lines_[cursor_]) : at(header);
        fail(p, "expected " + std::to_string(n) + " table rows, found "
                    + std::to_string(i));
      }
      Line const& l = lines_[cursor_++];
      if (l.tokens.size() != n) {
        fail(at(l), "expected " + std::to_string(n) + " entries in row, found "
                        + std::to_string(l.tokens.size()));
      }
      for (std::size_t j = 0; j < n; ++j) {
        src.table.set(i, j, resolve(l, l.tokens[j], partial));
        src.pos[i * n + j] = at(l, j);
      }
    }
    return src;
  }

  TernSource Parser::parse_ternary(Line const& header) {
    std::size_t const n = labels_.size();
    TernSource        src{TernTable(n), at(header)};
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (cursor_ >= lines_.size()
            || is_keyword(lines_[cursor_].tokens[0].text)) {
          Pos p = cursor_ < lines_.size() ? at(lines_[cursor_]) : at(header);
          fail(p, "expected " + std::to_string(n * n) + " table rows, found "
                      + std::to_string(k * n + i));
        }
        Line const& l = lines_[cursor_++];
        if (l.tokens.size() != n) {
          fail(at(l), "expected " + std::to_string(n)
                          + " entries in row, found "
                          + std::to_string(l.tokens.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
          src.table.set(i, j, k, resolve(l, l.tokens[j], false));
        }
      }
    }
    return src;
  }

  Algebra Parser::run() {
    if (lines_.empty()) {
      throw ParseError(1, 1, "expected \"algebra\"");
    }
    if (lines_[0].tokens[0].text != "algebra" || lines_[0].tokens.size() != 1) {
      fail(at(lines_[0]), "expected \"algebra\"");
    }
    cursor_    = 1;
    bool ended = false;
    while (cursor_ < lines_.size()) {
      Line const&        l   = lines_[cursor_++];
      std::string const& key = l.tokens[0].text;
      auto const need_elements = [&] {
        if (labels_.empty()) {
          fail(at(l), "\"elements:\" must come before \"" + key + "\"");
        }
      };
      if (key == "end") {
        if (l.tokens.size() != 1) {
          fail(at(l, 1), "unexpected token after \"end\"");
        }
        ended = true;
        break;
      } else if (key == "name:") {
        if (l.tokens.size() != 2) {
          fail(at(l), "expected \"name: <token>\"");
        }
        if (name_) {
          fail(at(l), "duplicate name line");
        }
        name_ = l.tokens[1].text;
      } else if (key == "class:") {
        if (l.tokens.size() != 2) {
          fail(at(l), "expected \"class: <tag>\"");
        }
        auto tag = parse_class_tag(l.tokens[1].text);
        if (!tag) {
          fail(at(l, 1), "unknown class \"" + l.tokens[1].text + "\"");
        }
        if (class_tag_) {
          fail(at(l), "duplicate class line");
        }
        class_tag_ = tag;
      } else if (key == "elements:") {
        parse_elements(l);
      } else if (key == "order:") {
        need_elements();
        if (l.tokens.size() != 1) {
          fail(at(l, 1), "unexpected token after \"order:\"");
        }
        if (has_order_) {
          fail(at(l), "duplicate order block");
        }
        has_order_ = true;
        order_pos_ = at(l);
        parse_order_lines();
      } else if (key == "op") {
        need_elements();
        std::string header;
        for (std::size_t k = 1; k < l.tokens.size(); ++k) {
          header += (k > 1 ? " " : "") + l.tokens[k].text;
        }
        auto const dup = [&](bool present) {
          if (present) {
            fail(at(l), "duplicate table \"op " + header + "\"");
          }
        };
        if (header == "join:") {
          dup(join_.has_value());
          join_ = parse_binary(l, false);
        } else if (header == "meet partial:") {
          dup(meet_.has_value());
          meet_ = parse_binary(l, true);
        } else if (header == "imp:") {
          dup(imp_.has_value());
          imp_ = parse_binary(l, false);
        } else if (header == "prod partial:") {
          dup(prod_.has_value());
          prod_ = parse_binary(l, true);
        } else if (header == "r:") {
          dup(r_.has_value());
          r_ = parse_ternary(l);
        } else if (header == "q:") {
          dup(q_.has_value());
          q_ = parse_ternary(l);
        } else {
          fail(l.tokens.size() > 1 ? at(l, 1) : at(l),
               "unknown table header \"op " + header + "\"");
        }
      } else {
        fail(at(l), "unexpected \"" + key + "\"");
      }
    }
    if (!ended) {
      Line const& last = lines_.back();
      throw ParseError(last.number, 1, "missing \"end\"");
    }
    if (cursor_ < lines_.size()) {
      fail(at(lines_[cursor_]), "unexpected content after \"end\"");
    }
    if (labels_.empty()) {
      fail(at(lines_[0]), "missing \"elements:\" line");
    }
    return assemble();
  }

  Algebra Parser::assemble() {
    std::size_t const n = labels_.size();

    // Reflexive-transitive closure of the order block.
    std::vector<std::vector<bool>> closure;
    if (has_order_) {
      closure.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        closure[i][i] = true;
      }
      for (auto [a, b] : order_pairs_) {
        closure[a][b] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!closure[i][k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (closure[k][j]) {
              closure[i][j] = true;
            }
          }
        }
      }
    }

    BinTable join(n);
    if (join_) {
      BinTable const& t   = join_->table;
      auto const      pos = [&](std::size_t i, std::size_t j) {
        return join_->pos[i * n + j];
      };
      if (options_.check_join_laws) {
        for (std::size_t x = 0; x < n; ++x) {
          if (t(x, x) != x) {
            fail(pos(x, x), "join table is not idempotent at (" + lbl(x) + ")");
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = x + 1; y < n; ++y) {
            if (t(x, y) != t(y, x)) {
              fail(pos(y, x), "join table is not commutative at " + pair(x, y));
            }
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
              if (t(x, t(y, z)) != t(t(x, y), z)) {
                fail(join_->header, "join table is not associative at (" + lbl(x)
                                        + "," + lbl(y) + "," + lbl(z) + ")");
              }
            }
          }
        }
      }
      join = t;
    } else if (has_order_) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (closure[i][j] && closure[j][i]) {
            fail(order_pos_, "order is not antisymmetric at " + pair(i, j));
          }
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::optional<std::size_t> least;
          for (std::size_t u = 0; u < n; ++u) {
            if (!closure[x][u] || !closure[y][u]) {
              continue;
            }
            bool below_all = true;
            for (std::size_t v = 0; v < n; ++v) {
              if (closure[x][v] && closure[y][v] && !closure[u][v]) {
                below_all = false;
                break;
              }
            }
            if (below_all) {
              least = u;
              break;
            }
          }
          if (!least) {
            fail(order_pos_, "no least upper bound for " + pair(x, y));
          }
          join.set(x, y, static_cast<elem_t>(*least));
        }
      }
    } else if (n == 1) {
      join.set(0, 0, 0);
    } else {
      fail(elements_pos_, "missing order block or join table");
    }

    // Top: the unique t with x v t = t for all x.
    std::optional<elem_t> top;
    std::size_t           tops = 0;
    for (std::size_t t = 0; t < n; ++t) {
      bool is_top = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (join(x, t) != t || join(t, x) != t) {
          is_top = false;
          break;
        }
      }
      if (is_top) {
        top = static_cast<elem_t>(t);
        ++tops;
      }
    }
    if (tops != 1) {
      fail(join_ ? join_->header : (has_order_ ? order_pos_ : elements_pos_),
           "no unique top");
    }

    Algebra alg(Universe{labels_, *top}, join);

    if (join_ && has_order_) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (alg.leq(i, j) != closure[i][j]) {
            fail(order_pos_,
                 "order block disagrees with join table at " + pair(i, j));
          }
        }
      }
    }

    if (meet_ && options_.check_join_laws) {
      BinTable const& t = meet_->table;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Pos const  p     = meet_->pos[x * n + y];
          bool const lower = bounded(alg, x, y);
          if (lower != (t(x, y) != UNDEF)) {
            fail(p, "meet table domain mismatch at " + pair(x, y));
          }
          if (!lower) {
            continue;
          }
          auto const inf = infimum(alg, x, y);
          if (!inf) {
            fail(p, "meet not unique for " + pair(x, y));
          }
          if (*inf != t(x, y)) {
            fail(p, "meet table entry at " + pair(x, y)
                        + " is not the greatest lower bound " + lbl(*inf));
          }
        }
      }
    }

    if (name_) {
      alg = alg.with_name(*name_);
    }
    if (class_tag_) {
      alg = alg.with_class(*class_tag_);
    }
    if (meet_) {
      alg = alg.with_meet(meet_->table);
    }
    if (imp_) {
      alg = alg.with_imp(imp_->table);
    }
    if (prod_) {
      alg = alg.with_prod(prod_->table);
    }
    if (r_) {
      alg = alg.with_r(r_->table);
    }
    if (q_) {
      alg = alg.with_q(q_->table);
    }
    return alg;
  }

  void write_binary(std::string& out, Algebra const& alg,
                    std::string_view header, BinTable const& t) {
    out += "op ";
    out += header;
    out += '\n';
    for (std::size_t i = 0; i < alg.size(); ++i) {
      out += ' ';
      for (std::size_t j = 0; j < alg.size(); ++j) {
        out += ' ';
        out += label_or_undef(alg, t(i, j));
      }
      out += '\n';
    }
  }

  void write_ternary(std::string& out, Algebra const& alg,
                     std::string_view header, TernTable const& t) {
    out += "op ";
    out += header;
    out += '\n';
    for (std::size_t k = 0; k < alg.size(); ++k) {
      if (k > 0) {
        out += '\n';
      }
      for (std::size_t i = 0; i < alg.size(); ++i) {
        out += ' ';
        for (std::size_t j = 0; j < alg.size(); ++j) {
          out += ' ';
          out += alg.label(t(i, j, k));
        }
        out += '\n';
      }
    }
  }

  std::string pad(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) {
      out.append(width - out.size(), ' ');
    }
    return out;
  }

  void rtrim(std::string& s) {
    while (!s.empty() && s.back() == ' ') {
      s.pop_back();
    }
  }

}  // namespace

Algebra parse_algebra(std::string_view text, ParseOptions options) {
  return Parser(text, options).run();
}

Algebra read_algebra_file(std::filesystem::path const& path,
                          ParseOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), options);
}

std::string serialize_algebra(Algebra const& alg) {
  std::string out = "algebra\n";
  if (!alg.name().empty()) {
    out += "name: " + alg.name() + "\n";
  }
  if (alg.class_tag() != ClassTag::none) {
    out += "class: ";
    out += to_string(alg.class_tag());
    out += '\n';
  }
  out += "elements:";
  for (auto const& l : alg.labels()) {
    out += ' ';
    out += l;
  }
  out += '\n';
  write_binary(out, alg, "join:", alg.join_table());
  if (alg.meet_table()) {
    write_binary(out, alg, "meet partial:", *alg.meet_table());
  }
  if (alg.imp_table()) {
    write_binary(out, alg, "imp:", *alg.imp_table());
  }
  if (alg.prod_table()) {
    write_binary(out, alg, "prod partial:", *alg.prod_table());
  }
  if (alg.r_table()) {
    write_ternary(out, alg, "r:", *alg.r_table());
  }
  if (alg.q_table()) {
    write_ternary(out, alg, "q:", *alg.q_table());
  }
  out += "end\n";
  return out;
}

void write_algebra_file(std::filesystem::path const& path, Algebra const& alg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << serialize_algebra(alg);
}

std::string render_table(Algebra const& alg, std::string_view op_name,
                         BinTable const& table) {
  std::size_t const n = alg.size();
  std::size_t       w = 1;
  for (auto const& l : alg.labels()) {
    w = std::max(w, l.size());
  }
  std::size_t const lw   = std::max(w, op_name.size());
  std::size_t const body = n * w + (n - 1);

  std::string out;
  std::string line = pad(op_name, lw) + " |";
  for (std::size_t j = 0; j < n; ++j) {
    line += ' ' + pad(alg.label(j), w);
  }
  rtrim(line);
  out += line + '\n';
  out += std::string(lw + 1, '-') + '+' + std::string(body + 1, '-') + '\n';
  for (std::size_t i = 0; i < n; ++i) {
    line = pad(alg.label(i), lw) + " |";
    for (std::size_t j = 0; j < n; ++j) {
      line += ' ' + pad(label_or_undef(alg, table(i, j)), w);
    }
    rtrim(line);
    out += line + '\n';
  }
  return out;
}

std::string render_tables(Algebra const& alg) {
  std::vector<std::string> parts;
  parts.push_back(render_table(alg, "join", alg.join_table()));
  if (alg.meet_table()) {
    parts.push_back(render_table(alg, "meet", *alg.meet_table()));
  }
  if (alg.imp_table()) {
    parts.push_back(render_table(alg, "imp", *alg.imp_table()));
  }
  if (alg.prod_table()) {
    parts.push_back(render_table(alg, "prod", *alg.prod_table()));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += '\n';
    }
    out += parts[i];
  }
  return out;
}

}  // namespace ordalg
