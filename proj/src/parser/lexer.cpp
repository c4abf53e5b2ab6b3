#include "hitgen/parser/lexer.hpp"

#include <cctype>

namespace hitgen {

std::string token_name(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::semi: return "end of item";
    case Tok::block_open: return "start of block";
    case Tok::block_close: return "end of block";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'→'";
    case Tok::equiv: return "'≡'";
    case Tok::lambda: return "'λ'";
    case Tok::dot: return "'.'";
    case Tok::kw_data: return "'data'";
    case Tok::kw_where: return "'where'";
    case Tok::kw_postulate: return "'postulate'";
    case Tok::kw_eval: return "'eval'";
    case Tok::kw_set: return "'Set'";
    case Tok::pragma: return "pragma";
    case Tok::eof: return "end of file";
  }
  return "token";
}

namespace {

struct Raw {
  Token tok;
  bool line_start = false;
};

class Scanner {
 public:
  Scanner(const std::string& text, const std::string& file) : s_(text), file_(file) {}

  std::vector<Raw> run();

 private:
  bool at(std::size_t k, const char* lit) const { return s_.compare(k, std::char_traits<char>::length(lit), lit) == 0; }
  void advance();
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::syntax, msg, SourceSpan{file_, line_, col_, col_ + 1});
  }
  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '{' ||
           c == '}' || c == ';';
  }

  const std::string& s_;
  std::string file_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void Scanner::advance() {
  unsigned char c = static_cast<unsigned char>(s_[i_]);
  ++i_;
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else if ((c & 0xC0) != 0x80) {
    // count code points; continuation bytes do not move the column
    ++col_;
  }
  while (i_ < s_.size() && (static_cast<unsigned char>(s_[i_]) & 0xC0) == 0x80) ++i_;
}

std::vector<Raw> Scanner::run() {
  std::vector<Raw> out;
  int last_line = 0;
  while (i_ < s_.size()) {
    char c = s_[i_];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (at(i_, "--")) {
      while (i_ < s_.size() && s_[i_] != '\n') advance();
      continue;
    }
    Token t;
    t.span = {file_, line_, col_, col_};
    if (at(i_, "{-#")) {
      std::size_t end = s_.find("#-}", i_);
      if (end == std::string::npos) fail("unterminated pragma");
      std::string body = s_.substr(i_ + 3, end - i_ - 3);
      while (i_ < end + 3) advance();
      std::size_t a = body.find_first_not_of(" \t\n");
      std::size_t b = body.find_last_not_of(" \t\n");
      t.kind = Tok::pragma;
      t.text = a == std::string::npos ? "" : body.substr(a, b - a + 1);
    } else if (at(i_, "{-")) {
      std::size_t end = s_.find("-}", i_ + 2);
      if (end == std::string::npos) fail("unterminated comment");
      while (i_ < end + 2) advance();
      continue;
    } else if (c == '(' || c == ')' || c == '{' || c == '}' || c == ';') {
      t.kind = c == '(' ? Tok::lparen
               : c == ')' ? Tok::rparen
               : c == '{' ? Tok::lbrace
               : c == '}' ? Tok::rbrace
                          : Tok::semi;
      t.text = std::string(1, c);
      advance();
    } else if (c == '.' && i_ + 1 < s_.size() && !delimiter(s_[i_ + 1]) ) {
      t.kind = Tok::dot;
      t.text = ".";
      advance();
    } else {
      std::size_t start = i_;
      while (i_ < s_.size() && !delimiter(s_[i_])) advance();
      t.text = s_.substr(start, i_ - start);
      const std::string& w = t.text;
      if (w == ":") t.kind = Tok::colon;
      else if (w == "=") t.kind = Tok::equals;
      else if (w == "→" || w == "->") t.kind = Tok::arrow;
      else if (w == "≡" || w == "==") t.kind = Tok::equiv;
      else if (w == "λ" || w == "\\") t.kind = Tok::lambda;
      else if (w == "data") t.kind = Tok::kw_data;
      else if (w == "where") t.kind = Tok::kw_where;
      else if (w == "postulate") t.kind = Tok::kw_postulate;
      else if (w == "eval") t.kind = Tok::kw_eval;
      else if (w == "Set") t.kind = Tok::kw_set;
      else if (w.find_first_not_of("0123456789") == std::string::npos) t.kind = Tok::number;
      else if (w == "." ) t.kind = Tok::dot;
      else t.kind = Tok::ident;
    }
    t.span.col_end = t.span.line == line_ ? col_ : t.span.col_start + 1;
    bool first = t.span.line != last_line;
    last_line = line_;
    out.push_back({std::move(t), first});
  }
  return out;
}

}  // namespace

std::vector<Token> lex(const std::string& text, const std::string& file) {
  std::vector<Raw> raw = Scanner(text, file).run();
  std::vector<Token> out;
  std::vector<int> blocks{1};
  bool open_next = false;
  bool seen_any = false;
  auto layout_token = [&](Tok k, const SourceSpan& at) { out.push_back({k, "", at}); };

  for (Raw& r : raw) {
    const SourceSpan& sp = r.tok.span;
    if (open_next) {
      open_next = false;
      layout_token(Tok::block_open, sp);
      if (sp.col_start > blocks.back()) {
        blocks.push_back(sp.col_start);
        out.push_back(std::move(r.tok));
        continue;
      }
      layout_token(Tok::block_close, sp);  // empty block
    }
    if (r.line_start && seen_any) {
      while (blocks.size() > 1 && sp.col_start < blocks.back()) {
        layout_token(Tok::block_close, sp);
        blocks.pop_back();
      }
      if (sp.col_start == blocks.back()) layout_token(Tok::semi, sp);
      else if (blocks.size() == 1 && sp.col_start < blocks.back()) layout_token(Tok::semi, sp);
    }
    seen_any = true;
    Tok k = r.tok.kind;
    out.push_back(std::move(r.tok));
    if (k == Tok::kw_where || k == Tok::kw_postulate) open_next = true;
  }
  SourceSpan end{file, raw.empty() ? 1 : raw.back().tok.span.line, 0, 0};
  if (!raw.empty()) end.col_start = end.col_end = raw.back().tok.span.col_end;
  if (open_next) {
    layout_token(Tok::block_open, end);
    layout_token(Tok::block_close, end);
  }
  while (blocks.size() > 1) {
    layout_token(Tok::block_close, end);
    blocks.pop_back();
  }
  layout_token(Tok::eof, end);
  return out;
}

}  // namespace hitgen
