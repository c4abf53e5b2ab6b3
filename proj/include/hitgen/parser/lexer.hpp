#pragma once

#include <string>
#include <vector>

#include "hitgen/core/error.hpp"

namespace hitgen {

enum class Tok {
  ident,
  number,
  lparen,
  rparen,
  lbrace,
  rbrace,
  semi,         // explicit `;` or a layout separator
  block_open,   // layout: start of an implicit block
  block_close,  // layout: end of an implicit block
  colon,
  equals,
  arrow,
  equiv,
  lambda,
  dot,
  kw_data,
  kw_where,
  kw_postulate,
  kw_eval,
  kw_set,
  pragma,
  eof,
};

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  SourceSpan span;
};

std::string token_name(Tok kind);

/// Splits source text into tokens and inserts layout tokens: a block opens
/// after `where` and `postulate` at the column of the next token, lines
/// starting at that column are separated by `semi`, and less indented lines
/// close it. Top-level items are separated the same way at column 1.
std::vector<Token> lex(const std::string& text, const std::string& file = {});

}  // namespace hitgen
