#include "tq/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "tq/error.hpp"

namespace tq {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int col = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Int, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (line.compare(i, 3, "..>") == 0) {
      out.push_back({Tok::Sym, "..>", col});
      i += 3;
      continue;
    }
    if (line.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Sym, "->", col});
      i += 2;
      continue;
    }
    if (std::string(":[]().*+-/=").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), col});
      ++i;
      continue;
    }
    throw ParseError(ErrorKind::ParseError, lineno, col, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

struct Ref {
  std::string name;
  int line, col;
};

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& msg, ErrorKind k = ErrorKind::ParseError) const {
    throw ParseError(k, line_, peek().col, msg);
  }

  Token take() { return toks_[pos_++]; }

  void expect(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }

  Ref ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    Token t = take();
    return {t.text, line_, t.col};
  }

  long integer() {
    if (peek().kind != Tok::Int) fail("expected an integer");
    const Token t = peek();
    try {
      long v = std::stol(t.text);
      ++pos_;
      return v;
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  void finish() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  // seq := atom ('.' atom)*, left associative
  LinearOrderExpr order_seq() {
    LinearOrderExpr e = order_atom();
    while (at_sym(".")) {
      ++pos_;
      e = LinearOrderExpr::concat(e, order_atom());
    }
    return e;
  }

  LinearOrderExpr order_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) return LinearOrderExpr::fin(static_cast<int>(integer()));
    if (at_sym("-")) {
      ++pos_;
      if (peek().kind != Tok::Ident || peek().text != "N") fail("expected N after '-'");
      ++pos_;
      return LinearOrderExpr::neg_nat();
    }
    if (at_sym("(")) {
      ++pos_;
      LinearOrderExpr e = at_sym(")") ? LinearOrderExpr::fin(0) : order_seq();
      expect(")");
      return e;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "N" || t.text == "Z") {
        ++pos_;
        return t.text == "N" ? LinearOrderExpr::nat() : LinearOrderExpr::integers();
      }
      if (t.text == "L" && toks_[pos_ + 1].kind == Tok::Sym && toks_[pos_ + 1].text == "(")
        fail("thread orders are not allowed as labels", ErrorKind::NestedThreadLabel);
    }
    fail("expected an order");
  }

  Scalar coefficient() {
    long num = integer();
    long den = 1;
    if (at_sym("/")) {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return Scalar(num, den);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

struct RelRefs {
  std::vector<std::vector<Ref>> words;
};

}  // namespace

ThreadQuiver parse_tq(const std::string& text) {
  ThreadQuiver tq;
  std::map<std::string, Ref> names;
  std::vector<Ref> endpoints;
  std::vector<RelRefs> rel_refs;

  auto claim = [&](const Ref& r) {
    if (names.count(r.name)) throw ParseError(ErrorKind::DuplicateName, r.line, r.col, "name '" + r.name + "' already used");
    names.emplace(r.name, r);
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser p(lex(line, lineno), lineno);
    if (p.at_end()) continue;
    const Ref kw = p.ident("a statement keyword");
    if (kw.name == "vertex") {
      if (p.at_end()) p.fail("expected a vertex name");
      while (!p.at_end()) {
        Ref v = p.ident("a vertex name");
        claim(v);
        tq.vertices.push_back(v.name);
      }
    } else if (kw.name == "arrow" || kw.name == "thread") {
      const bool thread = kw.name == "thread";
      Ref n = p.ident("an arrow name");
      p.expect(":");
      Ref s = p.ident("a source vertex");
      p.expect(thread ? "..>" : "->");
      Ref t = p.ident("a target vertex");
      endpoints.push_back(s);
      endpoints.push_back(t);
      claim(n);
      if (thread) {
        LinearOrderExpr label = LinearOrderExpr::fin(0);
        if (!p.at_end()) {
          p.expect("[");
          if (!p.at_sym("]")) label = p.order_seq();
          p.expect("]");
        }
        tq.threads.push_back({n.name, s.name, t.name, label});
      } else {
        tq.standard.push_back({n.name, s.name, t.name});
      }
      p.finish();
    } else if (kw.name == "relation") {
      NamedRelation rel;
      RelRefs refs;
      bool first = true;
      while (!p.at_sym("=")) {
        if (p.at_end()) p.fail("expected '= 0'");
        Scalar sign = 1;
        if (p.at_sym("+") || p.at_sym("-")) {
          if (p.at_sym("-")) sign = -1;
          p.take();
        } else if (!first) {
          p.fail("expected '+' or '-'");
        }
        first = false;
        Scalar c = 1;
        if (p.peek().kind == Tok::Int) {
          c = p.coefficient();
          p.expect("*");
        }
        std::vector<Ref> word{p.ident("an arrow name")};
        while (p.at_sym("*")) {
          p.take();
          word.push_back(p.ident("an arrow name"));
        }
        std::vector<std::string> path;
        for (auto it = word.rbegin(); it != word.rend(); ++it) path.push_back(it->name);
        rel.terms.emplace_back(sign * c, std::move(path));
        refs.words.emplace_back(word.rbegin(), word.rend());
      }
      p.expect("=");
      if (p.peek().kind != Tok::Int || p.peek().text != "0") p.fail("expected 0 on the right-hand side");
      p.take();
      p.finish();
      if (rel.terms.empty()) p.fail("empty relation");
      tq.relations.push_back(std::move(rel));
      rel_refs.push_back(std::move(refs));
    } else {
      throw ParseError(ErrorKind::ParseError, kw.line, kw.col, "unknown statement '" + kw.name + "'");
    }
  }

  std::set<std::string> verts(tq.vertices.begin(), tq.vertices.end());
  for (const Ref& r : endpoints)
    if (!verts.count(r.name)) throw ParseError(ErrorKind::UnknownVertex, r.line, r.col, "unknown vertex '" + r.name + "'");

  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& a : tq.standard) ends[a.name] = {a.src, a.tgt};
  for (const auto& t : tq.threads) ends[t.name] = {t.src, t.tgt};
  for (const auto& refs : rel_refs) {
    std::optional<std::pair<std::string, std::string>> span;
    for (const auto& word : refs.words) {
      for (std::size_t i = 0; i < word.size(); ++i) {
        const Ref& r = word[i];
        if (!ends.count(r.name)) throw ParseError(ErrorKind::ParseError, r.line, r.col, "unknown arrow '" + r.name + "'");
        if (i && ends[word[i - 1].name].second != ends[r.name].first)
          throw ParseError(ErrorKind::ParseError, r.line, r.col, "path does not compose at '" + r.name + "'");
      }
      std::pair<std::string, std::string> s{ends[word.front().name].first, ends[word.back().name].second};
      if (span && *span != s)
        throw ParseError(ErrorKind::ParseError, word.front().line, word.front().col, "relation paths are not parallel");
      span = s;
    }
  }
  tq.validate();
  return tq;
}

std::string serialize(const ThreadQuiver& tq) {
  std::ostringstream out;
  if (!tq.vertices.empty()) {
    out << "vertex";
    for (const auto& v : tq.vertices) out << ' ' << v;
    out << '\n';
  }
  for (const auto& a : tq.standard) out << "arrow " << a.name << ": " << a.src << " -> " << a.tgt << '\n';
  for (const auto& t : tq.threads)
    out << "thread " << t.name << ": " << t.src << " ..> " << t.tgt << " [" << t.label.str() << "]\n";
  for (const auto& r : tq.relations) {
    out << "relation";
    bool first = true;
    for (const auto& [c, path] : r.terms) {
      Scalar m = c;
      bool neg = false;
      if (c.modulus() == 0 && sgn(c.rational()) < 0) {
        neg = true;
        m = -c;
      }
      out << (first ? (neg ? " -" : "") : (neg ? " -" : " +")) << ' ';
      first = false;
      if (!m.is_one()) out << m.str() << '*';
      for (std::size_t k = path.size(); k-- > 0;) out << path[k] << (k ? "*" : "");
    }
    out << " = 0\n";
  }
  return out.str();
}

}  // namespace tq
