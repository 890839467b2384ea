#pragma once

// The line-oriented algebra file format and table rendering.
//
//   algebra
//   name: <token>
//   class: <jsl|sectioned|ncis|srs|rrs|ialg|ralg>
//   elements: <tok0> ... <tok(n-1)>
//   order:
//     x < y
//   op join:            n rows of n tokens
//   op meet partial:    "-" marks UNDEF
//   op imp:
//   op prod partial:
//   op r:               n blocks of n rows; block k fixes z = e_k
//   op q:
//   end
//
// Every line after "algebra" is optional except "elements:" and "end".
// A "#" starts a comment.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ordalg/algebra.hpp"

namespace ordalg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct ParseOptions {
  // When false, a join table that breaks the semilattice laws is accepted
  // as-is so that validate_join_semilattice can report the violation. A
  // unique top is still required.
  bool check_join_laws = true;
};

Algebra parse_algebra(std::string_view text, ParseOptions options = {});
Algebra read_algebra_file(std::filesystem::path const& path,
                          ParseOptions options = {});

/// Canonical text: single spaces, rows in element order, the join table
/// always present and no order block.
std::string serialize_algebra(Algebra const& alg);
void write_algebra_file(std::filesystem::path const& path, Algebra const& alg);

/// One binary table with a header row and column of labels:
///
///   imp | a b c d 1
///   ----+----------
///   a   | 1 1 c d 1
///
/// Columns are padded to the longest label; UNDEF prints as "-".
std::string render_table(Algebra const& alg, std::string_view op_name,
                         BinTable const& table);

/// Every binary operation present (join, meet, imp, prod), blank-line
/// separated.
std::string render_tables(Algebra const& alg);

}  // namespace ordalg
