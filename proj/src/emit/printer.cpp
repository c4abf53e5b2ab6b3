#include "hitgen/emit/printer.hpp"

#include <set>

namespace hitgen {

bool is_infix_name(const std::string& name) {
  if (name.size() < 3 || name.front() != '_' || name.back() != '_') return false;
  return name.find('_', 1) == name.size() - 1;
}

std::string infix_operator(const std::string& name) { return name.substr(1, name.size() - 2); }

namespace {

enum Prec { top = 0, arrow_dom = 1, eq_operand = 2, app_arg = 3 };

void free_info(const Term& t, std::size_t depth, std::set<std::size_t>& vars,
               std::set<std::string>& consts) {
  if (t.is_null()) return;
  switch (t.kind()) {
    case TermKind::var:
      if (t.index() >= depth) vars.insert(t.index() - depth);
      return;
    case TermKind::sort: return;
    case TermKind::constant: consts.insert(t.name()); return;
    case TermKind::pi:
      free_info(t.domain(), depth, vars, consts);
      free_info(t.codomain(), depth + 1, vars, consts);
      return;
    case TermKind::lam: free_info(t.body(), depth + 1, vars, consts); return;
    case TermKind::app:
      free_info(t.fun(), depth, vars, consts);
      free_info(t.arg(), depth, vars, consts);
      return;
    case TermKind::id:
      free_info(t.id_type(), depth, vars, consts);
      free_info(t.lhs(), depth, vars, consts);
      free_info(t.rhs(), depth, vars, consts);
      return;
    case TermKind::refl:
      free_info(t.refl_type(), depth, vars, consts);
      free_info(t.point(), depth, vars, consts);
      return;
  }
}

bool reserved(const std::string& n) {
  static const std::set<std::string> words{"refl", "_≡_", "Set", "data", "where",
                                           "postulate", "eval", "λ", "→", "≡", "_"};
  return words.count(n) > 0;
}

class Printer {
 public:
  Printer(std::vector<std::string> names, const PrintConfig& cfg)
      : names_(std::move(names)), cfg_(cfg) {}

  std::string term(const Term& t, int prec);
  // Name for a binder whose scope is `body` (which sees the binder as Var 0).
  std::string pick(const Binder& b, const Term& body);
  std::string binder_prefix(const Binder& b, const Term& dom, const Term& cod);

  std::vector<std::string>& names() { return names_; }
  const char* arrow() const { return cfg_.unicode_arrows ? "→" : "->"; }

 private:
  std::string app(const Term& t, int prec);
  std::string paren(const std::string& s, bool need) { return need ? "(" + s + ")" : s; }

  std::vector<std::string> names_;
  const PrintConfig& cfg_;
};

std::string Printer::pick(const Binder& b, const Term& body) {
  std::set<std::size_t> vars;
  std::set<std::string> consts;
  free_info(body, 1, vars, consts);
  std::set<std::string> avoid = consts;
  for (std::size_t i : vars) {
    if (i < names_.size()) avoid.insert(names_[names_.size() - 1 - i]);
  }
  std::string base = b.anonymous() ? "x" : b.hint;
  std::string n = base;
  while (avoid.count(n) || reserved(n)) n += "'";
  return n;
}

std::string Printer::binder_prefix(const Binder& b, const Term& dom, const Term& cod) {
  bool hidden = b.vis == Visibility::hidden;
  bool used = occurs_free(cod, 0);
  if (!used && !hidden && b.anonymous()) {
    std::string s = term(dom, arrow_dom);
    names_.push_back("");
    return s + " " + arrow() + " ";
  }
  std::string n = (used || !b.anonymous()) ? pick(b, cod) : "_";
  std::string s = term(dom, top);
  names_.push_back(n == "_" ? "" : n);
  return (hidden ? "{" : "(") + n + " : " + s + (hidden ? "}" : ")") + " " + arrow() + " ";
}

std::string Printer::term(const Term& t, int prec) {
  if (t.is_null()) return "?";
  switch (t.kind()) {
    case TermKind::var: {
      std::size_t i = t.index();
      if (i >= names_.size()) return "#" + std::to_string(i);
      const std::string& n = names_[names_.size() - 1 - i];
      return n.empty() ? "#" + std::to_string(i) : n;
    }
    case TermKind::sort: return "Set";
    case TermKind::constant: return t.name();
    case TermKind::pi: {
      std::size_t saved = names_.size();
      std::string out;
      Term cur = t;
      while (cur.is(TermKind::pi)) {
        out += binder_prefix(cur.binder(), cur.domain(), cur.codomain());
        cur = cur.codomain();
      }
      out += term(cur, top);
      names_.resize(saved);
      return paren(out, prec > top);
    }
    case TermKind::lam: {
      std::size_t saved = names_.size();
      std::string out = cfg_.unicode_arrows ? "λ" : "\\";
      Term cur = t;
      while (cur.is(TermKind::lam)) {
        std::string n = occurs_free(cur.body(), 0) ? pick(cur.binder(), cur.body()) : "_";
        if (n == "_" && !cur.binder().anonymous()) n = pick(cur.binder(), cur.body());
        out += cur.binder().vis == Visibility::hidden ? " {" + n + "}" : " " + n;
        names_.push_back(n == "_" ? "" : n);
        cur = cur.body();
      }
      out += std::string(" ") + arrow() + " " + term(cur, top);
      names_.resize(saved);
      return paren(out, prec > top);
    }
    case TermKind::app: return app(t, prec);
    case TermKind::id: {
      if (cfg_.show_hidden && !t.id_type().is_null()) {
        return paren("_≡_ {" + term(t.id_type(), top) + "} " + term(t.lhs(), app_arg) + " " +
                         term(t.rhs(), app_arg),
                     prec >= app_arg);
      }
      std::string eq = cfg_.unicode_arrows ? " ≡ " : " == ";
      return paren(term(t.lhs(), eq_operand) + eq + term(t.rhs(), eq_operand),
                   prec >= eq_operand);
    }
    case TermKind::refl: {
      if (!cfg_.show_hidden || t.point().is_null()) return "refl";
      std::string s = "refl ";
      if (!t.refl_type().is_null()) s += "{" + term(t.refl_type(), top) + "} ";
      return paren(s + term(t.point(), app_arg), prec >= app_arg);
    }
  }
  return "?";
}

std::string Printer::app(const Term& t, int prec) {
  Spine sp = spine_of(t);
  std::vector<Arg> shown;
  for (const Arg& a : sp.args) {
    if (a.vis == Visibility::visible || cfg_.show_hidden) shown.push_back(a);
  }
  if (!cfg_.show_hidden && sp.head.is(TermKind::constant) && is_infix_name(sp.head.name()) &&
      shown.size() == 2) {
    std::string s = term(shown[0].term, app_arg) + " " + infix_operator(sp.head.name()) + " " +
                    term(shown[1].term, app_arg);
    return paren(s, prec >= eq_operand);
  }
  std::string s = term(sp.head, app_arg);
  for (const Arg& a : shown) {
    if (a.vis == Visibility::hidden) {
      s += " {" + term(a.term, top) + "}";
    } else {
      s += " " + term(a.term, app_arg);
    }
  }
  if (shown.empty()) return sp.head.is(TermKind::lam) ? paren(s, prec > top) : s;
  return paren(s, prec >= app_arg);
}

std::string pattern_text(const Pattern& p, const std::vector<std::string>& names,
                         const PrintConfig& cfg, bool nested) {
  switch (p.kind) {
    case Pattern::Kind::var: return names.at(p.level);
    case Pattern::Kind::dot: {
      Printer pr(names, cfg);
      return "." + pr.term(p.dot, app_arg);
    }
    case Pattern::Kind::refl: return "refl";
    case Pattern::Kind::con: {
      std::vector<std::string> shown;
      std::vector<Visibility> vis;
      for (const auto& a : p.args) {
        if (a.vis == Visibility::visible || cfg.show_hidden) {
          shown.push_back(pattern_text(a.pat, names, cfg, true));
          vis.push_back(a.vis);
        }
      }
      std::string s;
      if (!cfg.show_hidden && is_infix_name(p.name) && shown.size() == 2) {
        s = shown[0] + " " + infix_operator(p.name) + " " + shown[1];
      } else {
        s = p.name;
        for (std::size_t i = 0; i < shown.size(); ++i) {
          s += vis[i] == Visibility::hidden ? " {" + shown[i] + "}" : " " + shown[i];
        }
      }
      return nested && !shown.empty() ? "(" + s + ")" : s;
    }
  }
  return "?";
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace

std::string print_term(const Term& t, const std::vector<std::string>& ctx, const PrintConfig& cfg) {
  Printer p(ctx, cfg);
  return p.term(t, top);
}

std::vector<std::string> telescope_names(const Telescope& tele,
                                         const std::vector<std::string>& outer) {
  std::vector<std::string> out = outer;
  std::set<std::string> used(outer.begin(), outer.end());
  for (const auto& e : tele) {
    std::string n = e.binder.anonymous() ? "x" : e.binder.hint;
    while (used.count(n) || reserved(n)) n += "'";
    used.insert(n);
    out.push_back(n);
  }
  return std::vector<std::string>(out.begin() + static_cast<long>(outer.size()), out.end());
}

std::string print_term(const Term& t, const Telescope& ctx, const PrintConfig& cfg) {
  return print_term(t, telescope_names(ctx), cfg);
}

std::string print_clause(const std::string& fun, const Clause& c, const PrintConfig& cfg) {
  std::vector<std::string> names = telescope_names(c.tel);
  std::string s = fun;
  for (const auto& pa : c.patterns) {
    if (pa.vis == Visibility::hidden && !cfg.show_hidden) continue;
    std::string p = pattern_text(pa.pat, names, cfg, true);
    s += pa.vis == Visibility::hidden ? " {" + p + "}" : " " + p;
  }
  return s + " = " + print_term(c.rhs, names, cfg);
}

std::string print_rewrite_type(const RewriteRule& rule, const PrintConfig& cfg) {
  Printer p({}, cfg);
  std::string out;
  // Telescope binders are printed like Π binders over the rule body.
  Term lhs = Term::constant(rule.head, ConstRole::defined);
  std::vector<std::string> names = telescope_names(rule.tel);
  Telescope tele = rule.tel;
  for (std::size_t i = 0; i < tele.size(); ++i) {
    bool hidden = tele[i].binder.vis == Visibility::hidden;
    Printer q(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(i)), cfg);
    out += std::string(hidden ? "{" : "(") + names[i] + " : " + q.term(tele[i].type, top) +
           (hidden ? "}" : ")") + " " + p.arrow() + " ";
  }
  Clause as_clause{rule.tel, rule.args, rule.rhs};
  std::string eqn = print_clause(rule.head, as_clause, cfg);
  std::size_t eq = eqn.find(" = ");
  return out + eqn.substr(0, eq) + " ↦ " + eqn.substr(eq + 3);
}

std::vector<std::string> wrap_declaration(const std::string& line, std::size_t indent,
                                          std::size_t width) {
  std::string pad(indent, ' ');
  if (display_width(line) + indent <= width) return {pad + line};
  // split after every top-level arrow
  std::vector<std::string> pieces;
  int depth = 0;
  std::size_t start = 0;
  const std::string arrow = "→ ";
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && line.compare(i, arrow.size(), arrow) == 0 && i > 0 && line[i - 1] == ' ') {
      pieces.push_back(line.substr(start, i + arrow.size() - start));
      start = i + arrow.size();
    }
  }
  pieces.push_back(line.substr(start));
  std::vector<std::string> out;
  std::string cur = pad;
  std::string cont(indent + 2, ' ');
  for (const auto& piece : pieces) {
    if (display_width(cur) + display_width(piece) > width && cur.size() > cont.size() &&
        cur.find_first_not_of(' ') != std::string::npos) {
      while (!cur.empty() && cur.back() == ' ') cur.pop_back();
      out.push_back(cur);
      cur = cont;
    }
    cur += piece;
  }
  while (!cur.empty() && cur.back() == ' ') cur.pop_back();
  out.push_back(cur);
  return out;
}

}  // namespace hitgen
