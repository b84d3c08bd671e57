#ifndef LCCC_DTT_HPP
#define LCCC_DTT_HPP

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lccc/depprod.hpp"
#include "lccc/errors.hpp"
#include "lccc/finset.hpp"
#include "lccc/limits.hpp"
#include "lccc/slice.hpp"

namespace lccc {

/// All DSL diagnostics carry a 1-based source position.
struct PositionedError : Error {
  int line;
  int col;
  PositionedError(const std::string& kind, int line_, int col_,
                  const std::string& what)
      : Error(kind + " at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + what),
        line(line_),
        col(col_) {}
};

struct SyntaxError : PositionedError {
  std::string expected;
  SyntaxError(int line, int col, const std::string& expected_,
              const std::string& got)
      : PositionedError("syntax error", line, col,
                        "expected " + expected_ + ", got " + got),
        expected(expected_) {}
};

struct NameError : PositionedError {
  NameError(int line, int col, const std::string& what)
      : PositionedError("name error", line, col, what) {}
};

struct TotalityError : PositionedError {
  TotalityError(int line, int col, const std::string& what)
      : PositionedError("totality error", line, col, what) {}
};

struct TypeError : PositionedError {
  TypeError(int line, int col, const std::string& what)
      : PositionedError("type error", line, col, what) {}
};

struct SetDecl {
  std::string name;
  std::vector<std::string> elements;
  int line = 0, col = 0;
};

struct MapDecl {
  std::string name;
  std::string dom, cod;
  std::vector<std::pair<std::string, std::string>> table;
  int line = 0, col = 0;
};

enum class ExprKind { Sum, Pi, Pull, Obj };

struct Expr {
  ExprKind kind = ExprKind::Obj;
  std::string f;  // empty for Obj
  std::string p;
  int line = 0, col = 0;
};

struct Program {
  std::vector<std::variant<SetDecl, MapDecl>> declarations;
  Expr query;
};

namespace detail {

struct Token {
  enum Kind { Name, Symbol, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Token t{Token::Name, "", line, col};
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_')) {
        t.text += src[i];
        advance(1);
      }
      out.push_back(std::move(t));
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Symbol, "->", line, col});
      advance(2);
      continue;
    }
    if (std::string("={}(),:").find(c) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, c), line, col});
      advance(1);
      continue;
    }
    throw SyntaxError(line, col, "a token", "'" + std::string(1, c) + "'");
  }
  out.push_back({Token::End, "<end of input>", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program parse_program() {
    Program prog;
    while (!(peek().kind == Token::Name && peek().text == "query")) {
      const Token& t = peek();
      if (t.kind == Token::Name && t.text == "set")
        prog.declarations.emplace_back(parse_set());
      else if (t.kind == Token::Name && t.text == "map")
        prog.declarations.emplace_back(parse_map());
      else
        throw SyntaxError(t.line, t.col, "'set', 'map' or 'query'",
                          quote(t));
    }
    next();  // query
    prog.query = parse_expr();
    const Token& t = peek();
    if (t.kind != Token::End)
      throw SyntaxError(t.line, t.col, "end of input", quote(t));
    validate(prog);
    return prog;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  static std::string quote(const Token& t) {
    return t.kind == Token::End ? t.text : "'" + t.text + "'";
  }

  Token expect_name(const std::string& what) {
    const Token& t = next();
    if (t.kind != Token::Name)
      throw SyntaxError(t.line, t.col, what, quote(t));
    return t;
  }

  Token expect_symbol(const std::string& sym) {
    const Token& t = next();
    if (t.kind != Token::Symbol || t.text != sym)
      throw SyntaxError(t.line, t.col, "'" + sym + "'", quote(t));
    return t;
  }

  SetDecl parse_set() {
    next();  // set
    Token name = expect_name("a set name");
    SetDecl d{name.text, {}, name.line, name.col};
    expect_symbol("=");
    expect_symbol("{");
    if (!(peek().kind == Token::Symbol && peek().text == "}")) {
      d.elements.push_back(expect_name("an element name").text);
      while (peek().kind == Token::Symbol && peek().text == ",") {
        next();
        d.elements.push_back(expect_name("an element name").text);
      }
    }
    expect_symbol("}");
    return d;
  }

  MapDecl parse_map() {
    next();  // map
    Token name = expect_name("a map name");
    MapDecl d{name.text, "", "", {}, name.line, name.col};
    expect_symbol(":");
    d.dom = expect_name("a domain set name").text;
    expect_symbol("->");
    d.cod = expect_name("a codomain set name").text;
    expect_symbol("=");
    expect_symbol("{");
    if (!(peek().kind == Token::Symbol && peek().text == "}")) {
      d.table.push_back(parse_arrow());
      while (peek().kind == Token::Symbol && peek().text == ",") {
        next();
        d.table.push_back(parse_arrow());
      }
    }
    expect_symbol("}");
    return d;
  }

  std::pair<std::string, std::string> parse_arrow() {
    std::string from = expect_name("an element name").text;
    expect_symbol("->");
    std::string to = expect_name("an element name").text;
    return {from, to};
  }

  Expr parse_expr() {
    Token head = expect_name("'Sum', 'Pi', 'Pull' or 'Obj'");
    Expr e;
    e.line = head.line;
    e.col = head.col;
    if (head.text == "Sum")
      e.kind = ExprKind::Sum;
    else if (head.text == "Pi")
      e.kind = ExprKind::Pi;
    else if (head.text == "Pull")
      e.kind = ExprKind::Pull;
    else if (head.text == "Obj")
      e.kind = ExprKind::Obj;
    else
      throw SyntaxError(head.line, head.col, "'Sum', 'Pi', 'Pull' or 'Obj'",
                        quote(head));
    expect_symbol("(");
    if (e.kind == ExprKind::Obj) {
      e.p = expect_name("a map name").text;
    } else {
      e.f = expect_name("a map name").text;
      expect_symbol(",");
      e.p = expect_name("a map name").text;
    }
    expect_symbol(")");
    return e;
  }

  // name resolution, totality and domain/codomain agreement
  static void validate(const Program& prog) {
    std::map<std::string, const SetDecl*> sets;
    std::map<std::string, const MapDecl*> maps;
    for (const auto& decl : prog.declarations) {
      if (const SetDecl* s = std::get_if<SetDecl>(&decl)) {
        if (sets.count(s->name) || maps.count(s->name))
          throw NameError(s->line, s->col,
                             "'" + s->name + "' is already declared");
        std::map<std::string, int> seen;
        for (const auto& e : s->elements)
          if (++seen[e] > 1)
            throw NameError(s->line, s->col,
                               "duplicate element '" + e + "' in set '" +
                                   s->name + "'");
        sets[s->name] = s;
      } else {
        const MapDecl& m = std::get<MapDecl>(decl);
        if (sets.count(m.name) || maps.count(m.name))
          throw NameError(m.line, m.col,
                             "'" + m.name + "' is already declared");
        auto dom = sets.find(m.dom);
        if (dom == sets.end())
          throw NameError(m.line, m.col,
                             "undeclared domain set '" + m.dom + "'");
        auto cod = sets.find(m.cod);
        if (cod == sets.end())
          throw NameError(m.line, m.col,
                             "undeclared codomain set '" + m.cod + "'");
        std::map<std::string, std::string> table;
        for (const auto& [from, to] : m.table) {
          bool in_dom = false;
          for (const auto& e : dom->second->elements)
            if (e == from) in_dom = true;
          if (!in_dom)
            throw TotalityError(m.line, m.col,
                                "map '" + m.name + "' has an entry for '" +
                                    from + "', which is not in '" + m.dom +
                                    "'");
          if (table.count(from))
            throw TotalityError(m.line, m.col,
                                "map '" + m.name +
                                    "' has two entries for '" + from + "'");
          bool in_cod = false;
          for (const auto& e : cod->second->elements)
            if (e == to) in_cod = true;
          if (!in_cod)
            throw TypeError(m.line, m.col,
                               "map '" + m.name + "' sends '" + from +
                                   "' to '" + to + "', which is not in '" +
                                   m.cod + "'");
          table[from] = to;
        }
        for (const auto& e : dom->second->elements)
          if (!table.count(e))
            throw TotalityError(m.line, m.col,
                                "map '" + m.name + "' is missing an entry "
                                    "for '" + e + "'");
        maps[m.name] = &m;
      }
    }
    const Expr& q = prog.query;
    auto resolve = [&](const std::string& n) -> const MapDecl* {
      auto it = maps.find(n);
      if (it == maps.end())
        throw NameError(q.line, q.col, "undeclared map '" + n + "'");
      return it->second;
    };
    const MapDecl* p = resolve(q.p);
    if (q.kind == ExprKind::Obj) return;
    const MapDecl* f = resolve(q.f);
    if (q.kind == ExprKind::Pull) {
      if (p->cod != f->cod)
        throw TypeError(q.line, q.col,
                           "Pull needs a family over '" + f->cod +
                               "', but '" + p->name + "' lands in '" +
                               p->cod + "'");
    } else if (p->cod != f->dom) {
      throw TypeError(
          q.line, q.col,
          std::string(q.kind == ExprKind::Sum ? "Sum" : "Pi") +
              " needs a family over '" + f->dom + "', but '" + p->name +
              "' lands in '" + p->cod + "'");
    }
  }
};

}  // namespace detail

inline Program parse(const std::string& source) {
  return detail::Parser(detail::tokenize(source)).parse_program();
}

inline std::string print_program(const Program& prog) {
  std::string out;
  for (const auto& decl : prog.declarations) {
    if (const SetDecl* s = std::get_if<SetDecl>(&decl)) {
      out += "set " + s->name + " = {";
      for (std::size_t i = 0; i < s->elements.size(); ++i)
        out += (i ? "," : "") + s->elements[i];
      out += "}\n";
    } else {
      const MapDecl& m = std::get<MapDecl>(decl);
      out += "map " + m.name + " : " + m.dom + " -> " + m.cod + " = {";
      for (std::size_t i = 0; i < m.table.size(); ++i)
        out += (i ? "," : "") + m.table[i].first + " -> " +
               m.table[i].second;
      out += "}\n";
    }
  }
  out += "query ";
  switch (prog.query.kind) {
    case ExprKind::Sum: out += "Sum(" + prog.query.f + "," + prog.query.p + ")"; break;
    case ExprKind::Pi: out += "Pi(" + prog.query.f + "," + prog.query.p + ")"; break;
    case ExprKind::Pull: out += "Pull(" + prog.query.f + "," + prog.query.p + ")"; break;
    case ExprKind::Obj: out += "Obj(" + prog.query.p + ")"; break;
  }
  out += "\n";
  return out;
}

struct EvalResult {
  SliceObj object;
  std::vector<std::pair<std::string, std::vector<std::string>>> fibers;
};

inline EvalResult eval(const Program& prog,
                       std::uint64_t limit = kDefaultLimit) {
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinMap> maps;
  for (const auto& decl : prog.declarations) {
    if (const SetDecl* s = std::get_if<SetDecl>(&decl)) {
      sets.emplace(s->name, FinSet(s->name, s->elements));
    } else {
      const MapDecl& m = std::get<MapDecl>(decl);
      const FinSet& dom = sets.at(m.dom);
      std::map<std::string, std::string> table(m.table.begin(),
                                               m.table.end());
      std::vector<std::string> images;
      images.reserve(dom.size());
      for (const auto& e : dom.elements()) images.push_back(table.at(e));
      maps.emplace(m.name, FinMap(dom, sets.at(m.cod), std::move(images)));
    }
  }
  const Expr& q = prog.query;
  SliceObj family{maps.at(q.p)};
  SliceObj object = family;
  switch (q.kind) {
    case ExprKind::Sum:
      object = dependent_sum(maps.at(q.f))(family);
      break;
    case ExprKind::Pi:
      object = dependent_product_fiberwise(maps.at(q.f), family, limit);
      break;
    case ExprKind::Pull:
      object = base_change(maps.at(q.f))(family);
      break;
    case ExprKind::Obj:
      break;
  }
  EvalResult result{object, {}};
  for (const auto& [a, fiber] : fiber_decomposition(object.proj)) {
    std::vector<std::string> elems(fiber.elements().begin(),
                                   fiber.elements().end());
    result.fibers.emplace_back(a, std::move(elems));
  }
  return result;
}

}  // namespace lccc

#endif  // LCCC_DTT_HPP
