#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "hgdec/hypergraph.hpp"

namespace hgdec {

namespace {

bool cq_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '.' || c == '-';
}

struct CqLexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (pos < text.size() && text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  bool at_conjunction_sign() const {
    // U+2227 in UTF-8
    return pos + 2 < text.size() && static_cast<unsigned char>(text[pos]) == 0xE2 &&
           static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
           static_cast<unsigned char>(text[pos + 2]) == 0xA7;
  }

  // Consumes commas, conjunction signs, and standalone AND keywords.
  void skip_separators() {
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        advance();
        continue;
      }
      if (at_conjunction_sign()) {
        advance();
        advance();
        advance();
        continue;
      }
      if (text.substr(pos, 3) == "AND" &&
          (pos + 3 >= text.size() || !cq_name_char(text[pos + 3]))) {
        // AND directly naming a relation ("AND(...)") is not a separator.
        std::size_t look = pos + 3;
        while (look < text.size() &&
               std::isspace(static_cast<unsigned char>(text[look])))
          ++look;
        if (look >= text.size() || text[look] != '(') {
          advance();
          advance();
          advance();
          continue;
        }
      }
      break;
    }
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string token(bool allow_question) {
    skip_ws();
    std::string out;
    if (allow_question && pos < text.size() && text[pos] == '?') {
      out += '?';
      advance();
    }
    if (pos >= text.size() || !cq_name_char(text[pos]))
      fail("expected a name");
    while (pos < text.size() && cq_name_char(text[pos])) {
      out += text[pos];
      advance();
    }
    return out;
  }
};

bool is_variable(const std::string& tok) {
  if (tok.empty()) return false;
  if (tok[0] == '?') return true;
  return std::isupper(static_cast<unsigned char>(tok[0]));
}

}  // namespace

Hypergraph cq_to_hypergraph(std::string_view text, std::string name) {
  CqLexer lex{text};
  HypergraphBuilder builder(std::move(name));
  bool any_variable = false;
  bool any_atom = false;
  for (;;) {
    lex.skip_separators();
    if (lex.eof()) break;
    std::string rel = lex.token(false);
    lex.expect('(');
    std::vector<std::string> vars;
    for (;;) {
      std::string arg = lex.token(true);
      if (is_variable(arg)) {
        std::string vn = arg[0] == '?' ? arg.substr(1) : arg;
        if (std::find(vars.begin(), vars.end(), vn) == vars.end())
          vars.push_back(vn);
      }
      lex.skip_ws();
      if (lex.pos < lex.text.size() && lex.text[lex.pos] == ',') {
        lex.advance();
        continue;
      }
      break;
    }
    lex.expect(')');
    any_atom = true;
    if (vars.empty()) continue;  // variable-free atoms contribute no edge
    any_variable = true;
    std::string ename = rel;
    for (int n = 2; builder.has_edge_name(ename); ++n)
      ename = rel + "." + std::to_string(n);
    builder.add_edge(ename, vars);
  }
  if (!any_atom) throw ParseError("empty query", lex.line, lex.col);
  if (!any_variable)
    throw ParseError("query has no variables", lex.line, lex.col);
  return builder.build();
}

}  // namespace hgdec
