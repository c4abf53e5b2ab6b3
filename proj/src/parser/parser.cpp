#include "hitgen/parser/parser.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hitgen/parser/lexer.hpp"

namespace hitgen {

Scope scope_of(const Signature& sig) {
  Scope s;
  for (const auto& name : sig.order()) s[name] = role_of(sig.find(name)->kind);
  return s;
}

namespace {

bool is_builtin(const std::string& n) { return n == "refl" || n == "_≡_"; }

// Surface pattern before variable resolution of dot terms.
struct SPat {
  enum class Kind { var, dot, con, refl } kind = Kind::var;
  std::size_t level = 0;
  std::size_t dot_pos = 0;  // token index of the dotted term
  std::string name;
  std::vector<std::pair<SPat, Visibility>> args;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string path, Scope scope)
      : toks_(std::move(toks)), path_(std::move(path)), globals_(std::move(scope)) {}

  SurfaceFile file();
  Term whole_term();
  std::vector<std::string>& locals() { return locals_; }

 private:
  // token helpers
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      fail(peek().span, std::string("expected ") + what + ", found " + describe(peek()));
    }
    return toks_[pos_++];
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::ident || t.kind == Tok::number) return "'" + t.text + "'";
    return token_name(t.kind);
  }
  [[noreturn]] void fail(const SourceSpan& at, const std::string& msg) const {
    throw Error(ErrorCode::syntax, msg, at);
  }
  SourceSpan join(const SourceSpan& a, const SourceSpan& b) const {
    SourceSpan s = a;
    if (b.line == a.line) s.col_end = std::max(a.col_end, b.col_end);
    return s;
  }

  // terms
  Term expr();
  Term eq_expr();
  Term app_expr();
  Term atom();
  Term ident_term(const Token& t);
  Term numeral(const Token& t);
  Term builtin_app(const Token& head, std::vector<Arg> args);
  bool starts_atom() const;
  bool binder_group_ahead() const;
  void binder_group(Telescope& out, std::vector<SourceSpan>* spans = nullptr);
  Term lambda();

  // items
  void item(SurfaceFile& f);
  void data_item(SurfaceFile& f);
  void postulate_item(SurfaceFile& f);
  void definition_item(SurfaceFile& f);
  void rewrite_item(SurfaceFile& f);
  void declare_global(const Token& name, ConstRole role);

  // clauses
  RawClause clause(const std::string& fun);
  SPat pattern_app(std::vector<Binder>& vars);
  SPat pattern_atom(std::vector<Binder>& vars);
  SPat pattern_var(const Token& t, std::vector<Binder>& vars);
  Pattern resolve(const SPat& p);

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string path_;
  Scope globals_;
  std::vector<std::string> locals_;  // outermost first; "" marks an anonymous binder
  std::set<std::string> own_points_;
  std::size_t own_params_ = 0;
};

// --- terms -----------------------------------------------------------------

Term Parser::whole_term() {
  Term t = expr();
  while (accept(Tok::semi)) {
  }
  if (!at(Tok::eof)) fail(peek().span, "unexpected " + describe(peek()) + " after term");
  return t;
}

bool Parser::starts_atom() const {
  switch (peek().kind) {
    case Tok::ident:
    case Tok::number:
    case Tok::lparen:
    case Tok::kw_set:
    case Tok::lambda:
      return true;
    default:
      return false;
  }
}

bool Parser::binder_group_ahead() const {
  if (!at(Tok::lparen) && !at(Tok::lbrace)) return false;
  std::size_t k = 1;
  while (peek(k).kind == Tok::ident) ++k;
  return k > 1 && peek(k).kind == Tok::colon;
}

void Parser::binder_group(Telescope& out, std::vector<SourceSpan>* spans) {
  bool hidden = at(Tok::lbrace);
  ++pos_;
  std::vector<Token> names;
  while (at(Tok::ident)) names.push_back(toks_[pos_++]);
  expect(Tok::colon, "':'");
  Term type = expr();
  expect(hidden ? Tok::rbrace : Tok::rparen, hidden ? "'}'" : "')'");
  for (std::size_t j = 0; j < names.size(); ++j) {
    Binder b{names[j].text, hidden ? Visibility::hidden : Visibility::visible};
    out.push_back({b, shift(type, static_cast<long>(j))});
    if (spans) spans->push_back(names[j].span);
    locals_.push_back(b.anonymous() ? "" : b.hint);
  }
}

Term Parser::lambda() {
  SourceSpan start = expect(Tok::lambda, "'λ'").span;
  std::vector<Binder> bs;
  while (!at(Tok::arrow)) {
    if (at(Tok::ident)) {
      bs.push_back({toks_[pos_++].text, Visibility::visible});
    } else if (at(Tok::lbrace) || at(Tok::lparen)) {
      bool hidden = at(Tok::lbrace);
      ++pos_;
      std::vector<std::string> names;
      while (at(Tok::ident)) names.push_back(toks_[pos_++].text);
      if (names.empty()) fail(peek().span, "expected a binder name");
      if (accept(Tok::colon)) {
        // annotations are accepted and dropped: λ carries no domain
        std::size_t saved = locals_.size();
        expr();
        locals_.resize(saved);
      }
      expect(hidden ? Tok::rbrace : Tok::rparen, hidden ? "'}'" : "')'");
      for (auto& n : names) bs.push_back({n, hidden ? Visibility::hidden : Visibility::visible});
    } else {
      fail(peek().span, "expected a binder or '→' in λ, found " + describe(peek()));
    }
  }
  if (bs.empty()) fail(peek().span, "λ needs at least one binder");
  ++pos_;
  for (auto& b : bs) locals_.push_back(b.anonymous() ? "" : b.hint);
  Term body = expr();
  locals_.resize(locals_.size() - bs.size());
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) body = Term::lam(*it, body);
  return body.with_span(start);
}

Term Parser::expr() {
  if (at(Tok::lambda)) return lambda();
  if (binder_group_ahead()) {
    SourceSpan start = peek().span;
    Telescope tele;
    std::size_t saved = locals_.size();
    while (binder_group_ahead()) binder_group(tele);
    expect(Tok::arrow, "'→' after a binder group");
    Term body = expr();
    locals_.resize(saved);
    return pi_over(tele, body).with_span(start);
  }
  Term lhs = eq_expr();
  if (accept(Tok::arrow)) {
    locals_.push_back("");
    Term rhs = expr();
    locals_.pop_back();
    return Term::pi(Binder{}, lhs, rhs).with_span(lhs.span());
  }
  return lhs;
}

Term Parser::eq_expr() {
  Term lhs = app_expr();
  if (accept(Tok::equiv)) {
    Term rhs = app_expr();
    return Term::id(Term(), lhs, rhs).with_span(lhs.span());
  }
  return lhs;
}

Term Parser::app_expr() {
  const Token& first = peek();
  bool special = first.kind == Tok::ident && is_builtin(first.text) &&
                 std::find(locals_.begin(), locals_.end(), first.text) == locals_.end();
  Term head;
  if (special) {
    ++pos_;
  } else {
    head = atom();
  }
  std::vector<Arg> args;
  for (;;) {
    if (at(Tok::lbrace)) {
      ++pos_;
      Term a = expr();
      expect(Tok::rbrace, "'}'");
      args.push_back({a, Visibility::hidden});
    } else if (starts_atom()) {
      args.push_back({atom(), Visibility::visible});
    } else {
      break;
    }
  }
  if (special) return builtin_app(first, std::move(args));
  SourceSpan sp = head.span();
  if (!args.empty()) sp = join(sp, args.back().term.span());
  return hitgen::apply(head, args).with_span(sp);
}

Term Parser::builtin_app(const Token& head, std::vector<Arg> args) {
  auto bad = [&]() -> Term {
    fail(head.span, "malformed use of " + head.text +
                        (head.text == "refl" ? " (expected refl, refl x or refl {A} x)"
                                             : " (expected _≡_ x y or _≡_ {A} x y)"));
  };
  Term type;
  std::size_t k = 0;
  if (k < args.size() && args[k].vis == Visibility::hidden) type = args[k++].term;
  for (std::size_t j = k; j < args.size(); ++j) {
    if (args[j].vis == Visibility::hidden) bad();
  }
  std::size_t rest = args.size() - k;
  if (head.text == "refl") {
    if (rest == 0 && type.is_null()) return Term::refl(Term(), Term()).with_span(head.span);
    if (rest != 1) bad();
    return Term::refl(type, args[k].term).with_span(head.span);
  }
  if (rest != 2) bad();
  return Term::id(type, args[k].term, args[k + 1].term).with_span(head.span);
}

Term Parser::numeral(const Token& t) {
  for (const char* n : {"zero", "suc"}) {
    if (!globals_.count(n)) {
      throw Error(ErrorCode::scope, "numeral " + t.text + " needs " + n + " in scope", t.span);
    }
  }
  unsigned long n = 0;
  try {
    n = std::stoul(t.text);
  } catch (const std::exception&) {
    fail(t.span, "numeral out of range");
  }
  if (n > 100000) fail(t.span, "numeral too large");
  Term out = Term::constant("zero", globals_.at("zero"));
  Term suc = Term::constant("suc", globals_.at("suc"));
  for (unsigned long i = 0; i < n; ++i) out = Term::app(suc, out);
  return out.with_span(t.span);
}

Term Parser::ident_term(const Token& t) {
  for (std::size_t i = locals_.size(); i-- > 0;) {
    if (locals_[i] == t.text) return Term::var(locals_.size() - 1 - i).with_span(t.span);
  }
  auto g = globals_.find(t.text);
  if (g != globals_.end()) {
    Term c = Term::constant(t.text, g->second).with_span(t.span);
    if (own_points_.count(t.text)) {
      // points of the declaration being read receive its parameters
      for (std::size_t j = 0; j < own_params_; ++j) {
        c = Term::app(c, Term::var(locals_.size() - 1 - j), Visibility::hidden);
      }
    }
    return c.with_span(t.span);
  }
  if (t.text == "refl") return Term::refl(Term(), Term()).with_span(t.span);
  if (is_builtin(t.text)) fail(t.span, t.text + " must be applied in head position");
  throw Error(ErrorCode::scope, "not in scope: " + t.text, t.span);
}

Term Parser::atom() {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::ident:
      ++pos_;
      if (t.text == "_") fail(t.span, "'_' is not a term");
      return ident_term(t);
    case Tok::number:
      ++pos_;
      return numeral(t);
    case Tok::kw_set:
      ++pos_;
      return Term::sort().with_span(t.span);
    case Tok::lambda:
      return lambda();
    case Tok::lparen: {
      ++pos_;
      Term e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    default:
      fail(t.span, "expected a term, found " + describe(t));
  }
}

// --- items -----------------------------------------------------------------

void Parser::declare_global(const Token& name, ConstRole role) {
  if (globals_.count(name.text) || is_builtin(name.text)) {
    throw Error(ErrorCode::duplicate_name, "name " + name.text + " is already declared",
                name.span);
  }
  globals_[name.text] = role;
}

SurfaceFile Parser::file() {
  SurfaceFile f;
  f.path = path_;
  for (;;) {
    while (accept(Tok::semi)) {
    }
    if (at(Tok::eof)) break;
    item(f);
    if (!at(Tok::semi) && !at(Tok::eof)) {
      fail(peek().span, "unexpected " + describe(peek()));
    }
  }
  return f;
}

void Parser::item(SurfaceFile& f) {
  switch (peek().kind) {
    case Tok::kw_data: return data_item(f);
    case Tok::kw_postulate: return postulate_item(f);
    case Tok::pragma: return rewrite_item(f);
    case Tok::kw_eval: {
      SourceSpan sp = toks_[pos_++].span;
      locals_.clear();
      Term t = expr();
      f.items.push_back(EvalItem{t, sp});
      return;
    }
    case Tok::ident: return definition_item(f);
    default:
      fail(peek().span, "expected a declaration, found " + describe(peek()));
  }
}

void Parser::rewrite_item(SurfaceFile& f) {
  const Token& t = toks_[pos_++];
  std::vector<std::string> words;
  std::size_t i = 0;
  const std::string& s = t.text;
  while (i < s.size()) {
    std::size_t j = s.find_first_of(" \t\n", i);
    if (j == std::string::npos) j = s.size();
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  if (words.empty() || words[0] != "REWRITE") return;  // other pragmas are ignored
  if (words.size() < 2) fail(t.span, "REWRITE pragma needs at least one name");
  RewriteItem r{{words.begin() + 1, words.end()}, t.span};
  for (const auto& n : r.names) {
    if (!globals_.count(n)) throw Error(ErrorCode::scope, "not in scope: " + n, t.span);
  }
  f.items.push_back(std::move(r));
}

void Parser::postulate_item(SurfaceFile& f) {
  PostulateItem p;
  p.span = toks_[pos_++].span;
  expect(Tok::block_open, "a postulate block");
  while (!accept(Tok::block_close)) {
    if (accept(Tok::semi)) continue;
    const Token& name = expect(Tok::ident, "a postulate name");
    expect(Tok::colon, "':'");
    locals_.clear();
    Term type = expr();
    declare_global(name, ConstRole::postulate);
    p.decls.push_back({name.text, type, name.span});
  }
  f.items.push_back(std::move(p));
}

void Parser::definition_item(SurfaceFile& f) {
  const Token& name = toks_[pos_];
  if (peek(1).kind != Tok::colon) {
    if (globals_.count(name.text)) {
      fail(name.span, "clause for " + name.text + " must directly follow its type signature");
    }
    throw Error(ErrorCode::scope, "clause for undeclared name " + name.text, name.span);
  }
  pos_ += 2;
  DefinitionItem d;
  d.name = name.text;
  d.span = name.span;
  locals_.clear();
  d.type = expr();
  declare_global(name, ConstRole::defined);
  int last_line = toks_[pos_ - 1].span.line;
  while (at(Tok::semi) && peek(1).kind == Tok::ident && peek(1).text == d.name &&
         peek(2).kind != Tok::colon) {
    ++pos_;
    d.clauses.push_back(clause(d.name));
    last_line = toks_[pos_ - 1].span.line;
  }
  d.source_lines = last_line - d.span.line + 1;
  f.items.push_back(std::move(d));
}

void Parser::data_item(SurfaceFile& f) {
  SourceSpan start = toks_[pos_++].span;
  const Token& name = expect(Tok::ident, "a datatype name");
  DataDecl decl;
  decl.name = name.text;
  decl.span = name.span;
  locals_.clear();
  while (binder_group_ahead()) binder_group(decl.params);
  for (auto& p : decl.params) p.binder.vis = Visibility::visible;
  expect(Tok::colon, "':' in data header");
  std::size_t np = decl.params.size();
  Term sort = expr();
  Term body = split_pi(sort, decl.indices);
  if (!body.is(TermKind::sort)) {
    throw Error(ErrorCode::classify, "the type of " + decl.name + " must end in Set", name.span);
  }
  for (auto& e : decl.indices) {
    e.binder.vis = Visibility::visible;
    if (!e.binder.anonymous()) continue;
    Term h = spine_of(e.type).head;
    std::string hint = "i";
    if (h.is(TermKind::constant) && !h.name().empty() &&
        std::isalpha(static_cast<unsigned char>(h.name()[0]))) {
      hint = std::string(1, static_cast<char>(std::tolower(h.name()[0])));
    }
    e.binder.hint = hint;
  }
  declare_global(name, ConstRole::datatype);
  own_params_ = np;
  expect(Tok::kw_where, "'where'");
  expect(Tok::block_open, "constructors");
  while (!accept(Tok::block_close)) {
    if (accept(Tok::semi)) continue;
    const Token& cname = expect(Tok::ident, "a constructor name");
    expect(Tok::colon, "':'");
    Term type = expr();
    Telescope args;
    Term cod = split_pi(type, args);
    std::size_t na = args.size();
    Spine sp = spine_of(cod);
    if (sp.head.is(TermKind::constant) && sp.head.name() == decl.name) {
      if (sp.args.size() != np + decl.indices.size()) {
        throw Error(ErrorCode::classify,
                    "constructor " + cname.text + " must target " + decl.name + " applied to " +
                        std::to_string(np + decl.indices.size()) + " arguments",
                    cname.span);
      }
      ConstructorSig c{cname.text, args, {}, cname.span};
      for (std::size_t j = 0; j < sp.args.size(); ++j) {
        if (j < np) {
          if (!(sp.args[j].term == Term::var(na + np - 1 - j)) ||
              sp.args[j].vis != Visibility::visible) {
            throw Error(ErrorCode::classify,
                        "constructor " + cname.text + " must pass the parameters of " +
                            decl.name + " unchanged",
                        cname.span);
          }
        } else {
          c.index_instantiations.push_back(sp.args[j].term);
        }
      }
      decl.points.push_back(std::move(c));
    } else if (cod.is(TermKind::id)) {
      for (const Term* side : {&cod.lhs(), &cod.rhs()}) {
        Term h = spine_of(*side).head;
        if (!h.is(TermKind::constant) || !decl.find_point(h.name())) {
          throw Error(ErrorCode::classify,
                      "path constructor " + cname.text +
                          ": endpoints must be applications of point constructors of " +
                          decl.name,
                      cname.span);
        }
      }
      decl.paths.push_back(PathSig{cname.text, args, cod.lhs(), cod.rhs(), {}, cname.span});
    } else {
      throw Error(ErrorCode::classify,
                  "constructor " + cname.text + " must target " + decl.name +
                      " or an identity between its points",
                  cname.span);
    }
    declare_global(cname, ConstRole::constructor);
    if (decl.find_point(cname.text)) own_points_.insert(cname.text);
  }
  own_points_.clear();
  std::size_t last = pos_ - 1;
  while (last > 0 && toks_[last].text.empty()) --last;  // skip layout tokens
  decl.source_lines = std::max(1, toks_[last].span.line - start.line + 1);
  for (const std::string& e : {default_rec_name(decl.name), default_ind_name(decl.name)}) {
    if (!globals_.count(e)) globals_[e] = ConstRole::defined;
  }
  locals_.clear();
  f.items.push_back(DataItem{std::move(decl)});
}

// --- clauses ---------------------------------------------------------------

SPat Parser::pattern_var(const Token& t, std::vector<Binder>& vars) {
  if (t.text != "_") {
    for (const auto& b : vars) {
      if (b.hint == t.text) {
        throw Error(ErrorCode::pattern_restriction,
                    "pattern variable " + t.text + " is bound twice", t.span);
      }
    }
  }
  SPat p;
  p.kind = SPat::Kind::var;
  p.level = vars.size();
  p.span = t.span;
  vars.push_back({t.text, Visibility::visible});
  return p;
}

SPat Parser::pattern_atom(std::vector<Binder>& vars) {
  const Token& t = peek();
  SPat p;
  p.span = t.span;
  switch (t.kind) {
    case Tok::ident: {
      ++pos_;
      if (t.text == "refl") {
        p.kind = SPat::Kind::refl;
        return p;
      }
      auto g = globals_.find(t.text);
      if (g != globals_.end() && g->second == ConstRole::constructor) {
        p.kind = SPat::Kind::con;
        p.name = t.text;
        return p;
      }
      return pattern_var(t, vars);
    }
    case Tok::number: {
      ++pos_;
      numeral(t);  // scope check
      unsigned long n = std::stoul(t.text);
      SPat z;
      z.kind = SPat::Kind::con;
      z.name = "zero";
      z.span = t.span;
      for (unsigned long i = 0; i < n; ++i) {
        SPat s;
        s.kind = SPat::Kind::con;
        s.name = "suc";
        s.span = t.span;
        s.args.push_back({z, Visibility::visible});
        z = s;
      }
      return z;
    }
    case Tok::dot: {
      ++pos_;
      p.kind = SPat::Kind::dot;
      p.dot_pos = pos_;
      if (at(Tok::ident)) {
        ++pos_;
      } else if (at(Tok::lparen)) {
        int depth = 0;
        do {
          if (at(Tok::lparen)) ++depth;
          if (at(Tok::rparen)) --depth;
          if (at(Tok::eof) || at(Tok::semi)) fail(peek().span, "unterminated dot pattern");
          ++pos_;
        } while (depth > 0);
      } else {
        fail(peek().span, "expected a term after '.'");
      }
      return p;
    }
    case Tok::lparen: {
      ++pos_;
      SPat inner = pattern_app(vars);
      expect(Tok::rparen, "')'");
      return inner;
    }
    default:
      fail(t.span, "expected a pattern, found " + describe(t));
  }
}

SPat Parser::pattern_app(std::vector<Binder>& vars) {
  SPat head = pattern_atom(vars);
  if (head.kind != SPat::Kind::con) return head;
  for (;;) {
    if (at(Tok::lbrace)) {
      ++pos_;
      SPat a = pattern_app(vars);
      expect(Tok::rbrace, "'}'");
      head.args.push_back({a, Visibility::hidden});
    } else if (at(Tok::ident) || at(Tok::number) || at(Tok::dot) || at(Tok::lparen)) {
      head.args.push_back({pattern_atom(vars), Visibility::visible});
    } else {
      return head;
    }
  }
}

Pattern Parser::resolve(const SPat& p) {
  switch (p.kind) {
    case SPat::Kind::var: return Pattern::var(p.level);
    case SPat::Kind::refl: return Pattern::refl();
    case SPat::Kind::dot: {
      std::size_t saved = pos_;
      pos_ = p.dot_pos;
      Term t = atom();
      pos_ = saved;
      return Pattern::inaccessible(t);
    }
    case SPat::Kind::con: {
      std::vector<PatArg> args;
      for (const auto& [a, vis] : p.args) args.push_back({resolve(a), vis});
      return Pattern::con(p.name, std::move(args));
    }
  }
  return Pattern::var(0);
}

RawClause Parser::clause(const std::string& fun) {
  RawClause rc;
  rc.span = toks_[pos_++].span;
  std::vector<std::pair<SPat, Visibility>> pats;
  while (!at(Tok::equals)) {
    if (at(Tok::lbrace)) {
      ++pos_;
      SPat a = pattern_app(rc.vars);
      expect(Tok::rbrace, "'}'");
      pats.push_back({a, Visibility::hidden});
    } else if (at(Tok::ident) || at(Tok::number) || at(Tok::dot) || at(Tok::lparen)) {
      pats.push_back({pattern_atom(rc.vars), Visibility::visible});
    } else {
      fail(peek().span, "expected a pattern or '=' in a clause of " + fun + ", found " +
                            describe(peek()));
    }
  }
  ++pos_;
  locals_.clear();
  for (const auto& b : rc.vars) locals_.push_back(b.anonymous() ? "" : b.hint);
  for (const auto& [sp, vis] : pats) rc.patterns.push_back({resolve(sp), vis});
  rc.rhs = expr();
  locals_.clear();
  return rc;
}

std::vector<Token> strip_layout(std::vector<Token> toks) {
  std::vector<Token> out;
  for (auto& t : toks) {
    if (t.kind == Tok::semi && t.text.empty()) continue;
    if (t.kind == Tok::block_open || t.kind == Tok::block_close) continue;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SurfaceFile parse_file(const std::string& text, const std::string& path, const Scope& scope) {
  Parser p(lex(text, path), path, scope);
  return p.file();
}

Term parse_term(const std::string& text, const std::vector<std::string>& context,
                const Scope& scope) {
  Parser p(strip_layout(lex(text)), {}, scope);
  p.locals() = context;
  return p.whole_term();
}

Term parse_term(const std::string& text, const Telescope& context, const Scope& scope) {
  std::vector<std::string> names;
  for (const auto& e : context) names.push_back(e.binder.anonymous() ? "" : e.binder.hint);
  return parse_term(text, names, scope);
}

}  // namespace hitgen
