#pragma once

// Line-oriented DSL for bound quiver presentations:
//
//   # comment
//   field: 32003
//   vertices: 1 2 3
//   arrow: a1 : 2 -> 1
//   relation: a1*a2 = 0
//   relation: a3*a5 - a4*a6 = 0
//   relation: 2*a1*a2 + a3*a4 = 0
//
// `*` composes like functions: in a1*a2 the right factor a2 is traversed
// first, so the product needs src(a1) == tgt(a2). Sections may come in any
// order; duplicate names are rejected; errors carry line numbers.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/quiver.hpp"

namespace tautilt {

struct DslFile {
  Quiver quiver;
  std::vector<Relation> relations;
  uint32_t p = 32003;
  bool p_set = false;
};

namespace detail {

inline std::string dsl_trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Tok {
  enum Kind { Ident, Num, Star, Plus, Minus, Eq } kind;
  std::string text;
  long long num = 0;
};

inline std::vector<Tok> lex_expr(const std::string& s, int line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::Star, "*"});
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::Minus, "-"});
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::Eq, "="});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Tok t{Tok::Num, s.substr(i, j - i)};
      t.num = std::stoll(t.text);
      out.push_back(t);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i)});
      i = j;
    } else {
      throw ParseError("line " + std::to_string(line) + ": unexpected character '" +
                       std::string(1, c) + "'");
    }
  }
  return out;
}

}  // namespace detail

inline DslFile parse_dsl(const std::string& text) {
  DslFile file;
  std::vector<std::pair<int, std::string>> relation_lines;
  bool vertices_seen = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::dsl_trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key: ...'");
    std::string key = detail::dsl_trim(line.substr(0, colon));
    std::string payload = detail::dsl_trim(line.substr(colon + 1));

    if (key == "vertices") {
      if (vertices_seen)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate vertices section");
      vertices_seen = true;
      std::istringstream ps(payload);
      int v;
      while (ps >> v) file.quiver.vertices.push_back(v);
      if (!ps.eof())
        throw ParseError("line " + std::to_string(lineno) + ": vertices must be integers");
    } else if (key == "arrow") {
      // name : src -> tgt
      std::string norm;
      for (size_t i = 0; i < payload.size(); ++i) {
        if (payload[i] == ':') {
          norm += " : ";
        } else if (payload.compare(i, 2, "->") == 0) {
          norm += " -> ";
          ++i;
        } else {
          norm += payload[i];
        }
      }
      std::istringstream ps(norm);
      std::string name, colon2, arrowtok;
      int src, tgt;
      if (!(ps >> name >> colon2 >> src >> arrowtok >> tgt) || colon2 != ":" || arrowtok != "->")
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'arrow: <name> : <src> -> <tgt>'");
      file.quiver.arrows.push_back(Arrow{name, src, tgt});
    } else if (key == "relation") {
      relation_lines.emplace_back(lineno, payload);
    } else if (key == "field") {
      if (file.p_set) throw ParseError("line " + std::to_string(lineno) + ": duplicate field line");
      std::istringstream ps(payload);
      long long p;
      if (!(ps >> p) || p < 2)
        throw ParseError("line " + std::to_string(lineno) + ": field must be a prime");
      file.p = static_cast<uint32_t>(p);
      file.p_set = true;
      if (!is_prime(file.p))
        throw ParseError("line " + std::to_string(lineno) + ": field must be a prime");
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown section '" + key + "'");
    }
  }

  file.quiver.validate();

  for (const auto& [line, payload] : relation_lines) {
    std::vector<detail::Tok> toks = detail::lex_expr(payload, line);
    Relation rel;
    size_t i = 0;
    long long sign = 1;
    bool expect_term = true;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(line) + ": " + msg);
    };
    while (i < toks.size() && toks[i].kind != detail::Tok::Eq) {
      if (toks[i].kind == detail::Tok::Plus || toks[i].kind == detail::Tok::Minus) {
        sign = (toks[i].kind == detail::Tok::Minus) ? -sign : sign;
        ++i;
        expect_term = true;
        continue;
      }
      if (!expect_term) fail("expected '+', '-' or '=' between terms");
      long long coeff = 1;
      if (toks[i].kind == detail::Tok::Num) {
        coeff = toks[i].num;
        ++i;
        if (i >= toks.size() || toks[i].kind != detail::Tok::Star)
          fail("expected '*' after coefficient");
        ++i;
      }
      std::vector<std::string> names;
      while (true) {
        if (i >= toks.size() || toks[i].kind != detail::Tok::Ident) fail("expected arrow name");
        names.push_back(toks[i].text);
        ++i;
        if (i < toks.size() && toks[i].kind == detail::Tok::Star) {
          ++i;
          continue;
        }
        break;
      }
      // written product: right factor traversed first
      RelTerm term;
      term.coeff = sign * coeff;
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        term.arrows.push_back(file.quiver.arrow_index(*it));
      for (size_t k = 0; k + 1 < names.size(); ++k) {
        const Arrow& left = file.quiver.arrows[file.quiver.arrow_index(names[k])];
        const Arrow& right = file.quiver.arrows[file.quiver.arrow_index(names[k + 1])];
        if (left.src != right.tgt)
          fail(names[k] + "*" + names[k + 1] + " not composable: src(" + names[k] + ")=" +
               std::to_string(left.src) + " differs from tgt(" + names[k + 1] + ")=" +
               std::to_string(right.tgt));
      }
      rel.terms.push_back(std::move(term));
      sign = 1;
      expect_term = false;
    }
    if (i >= toks.size() || toks[i].kind != detail::Tok::Eq) fail("relation must end in '= 0'");
    ++i;
    if (i + 1 != toks.size() || toks[i].kind != detail::Tok::Num || toks[i].num != 0)
      fail("relation must end in '= 0'");
    if (rel.terms.empty()) fail("empty relation");
    file.relations.push_back(std::move(rel));
  }

  return file;
}

inline std::string emit_dsl(const Quiver& q, const std::vector<Relation>& rels, uint32_t p,
                            const std::string& header = "") {
  std::ostringstream os;
  if (!header.empty()) os << "# " << header << "\n";
  os << "field: " << p << "\n";
  os << "vertices:";
  for (int v : q.vertices) os << " " << v;
  os << "\n";
  for (const Arrow& a : q.arrows)
    os << "arrow: " << a.name << " : " << a.src << " -> " << a.tgt << "\n";
  for (const Relation& r : rels) {
    os << "relation: ";
    for (size_t t = 0; t < r.terms.size(); ++t) {
      long long c = r.terms[t].coeff;
      if (t == 0) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      long long mag = c < 0 ? -c : c;
      if (mag != 1) os << mag << "*";
      const auto& w = r.terms[t].arrows;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        os << q.arrows[*it].name << (it + 1 == w.rend() ? "" : "*");
    }
    os << " = 0\n";
  }
  return os.str();
}

}  // namespace tautilt
