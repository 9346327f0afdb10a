#include "poico/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace poico {

ParseError::ParseError(const std::string& msg, int line_, int col_, std::string token_)
    : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) +
                         (token_.empty() ? std::string() : " (near '" + token_ + "')")),
      line(line_),
      col(col_),
      token(std::move(token_)) {}

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Plus, Minus, Star, Caret, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  std::vector<Token> toks;

  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) { toks.push_back({k, std::move(t), l, c}); };
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
        continue;
      }
      int start_col = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
          s += text[i];
          ++i;
          ++col;
        }
        push(Tok::Ident, s, line, start_col);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          s += text[i];
          ++i;
          ++col;
        }
        // rational literal p/q
        if (i < text.size() && text[i] == '/' && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
          s += '/';
          ++i;
          ++col;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            s += text[i];
            ++i;
            ++col;
          }
        }
        push(Tok::Number, s, line, start_col);
        continue;
      }
      Tok k;
      switch (c) {
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case ',': k = Tok::Comma; break;
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        default:
          throw ParseError("unexpected character", line, col, std::string(1, c));
      }
      push(k, std::string(1, c), line, start_col);
      ++i;
      ++col;
    }
    toks.push_back({Tok::End, "", line, col});
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  std::vector<std::string> coords;

  explicit Parser(const std::string& text) : toks(Lexer(text).toks) {}

  const Token& cur() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col, t.text);
  }

  void expect(Tok k, const std::string& what) {
    if (cur().kind != k) fail("expected " + what, cur());
    ++pos;
  }

  int coord_index(const std::string& name) const {
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == name) return static_cast<int>(i);
    return -1;
  }

  // true when the token at `at` starts a basis factor d<coord>^d<coord>
  bool basis_starts_at(size_t at) const {
    const Token& t = toks[at];
    if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'd') return false;
    if (coord_index(t.text.substr(1)) < 0) return false;
    return toks.size() > at + 1 && toks[at + 1].kind == Tok::Caret;
  }

  StructureDoc parse_doc() {
    StructureDoc doc;
    if (cur().kind != Tok::Ident || cur().text != "coords") fail("expected 'coords'", cur());
    ++pos;
    expect(Tok::LParen, "'('");
    while (true) {
      if (cur().kind != Tok::Ident) fail("expected coordinate name", cur());
      std::string name = next().text;
      if (coord_index(name) >= 0) fail("duplicate coordinate name", toks[pos - 1]);
      coords.push_back(name);
      if (cur().kind == Tok::Comma) {
        ++pos;
        continue;
      }
      break;
    }
    expect(Tok::RParen, "')'");
    doc.coords = coords;

    if (cur().kind == Tok::Ident && cur().text == "weights") {
      ++pos;
      expect(Tok::LParen, "'('");
      std::vector<int> w;
      while (true) {
        if (cur().kind != Tok::Number || cur().text.find('/') != std::string::npos)
          fail("expected integer weight", cur());
        long v = std::stol(next().text);
        if (v <= 0) fail("weights must be positive", toks[pos - 1]);
        w.push_back(static_cast<int>(v));
        if (cur().kind == Tok::Comma) {
          ++pos;
          continue;
        }
        break;
      }
      expect(Tok::RParen, "')'");
      if (w.size() != coords.size()) fail("weight count differs from coordinate count", cur());
      doc.weights = w;
    }

    doc.bivector = parse_bivector();
    if (cur().kind != Tok::End) fail("unexpected trailing input", cur());
    return doc;
  }

  Multivector parse_bivector() {
    int n = static_cast<int>(coords.size());
    Multivector acc(n, 2);
    bool negate = false;
    if (cur().kind == Tok::Plus || cur().kind == Tok::Minus) negate = (next().kind == Tok::Minus);
    acc = acc + parse_term(negate);
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      bool neg = (next().kind == Tok::Minus);
      acc = acc + parse_term(neg);
    }
    return acc;
  }

  // term := [polyfactor "*"] basis | "0"
  Multivector parse_term(bool negate) {
    int n = static_cast<int>(coords.size());
    Polynomial factor = Polynomial::constant(n, negate ? -1 : 1);
    bool have_factor = false;
    while (true) {
      if (basis_starts_at(pos)) {
        auto [mask, sign] = parse_basis();
        Multivector term(n, 2);
        if (sign != 0) term.add_term(mask, factor * Rational(sign));
        return term;
      }
      Polynomial f = parse_power();
      factor = factor * f;
      have_factor = true;
      if (cur().kind == Tok::Star) {
        ++pos;
        continue;
      }
      break;
    }
    // a factor-only term is legal exactly when it is zero
    if (have_factor && factor.is_zero()) return Multivector(n, 2);
    fail("term lacks a bivector basis (expected d<coord>^d<coord>)", cur());
  }

  // basis := d<coord> ^ d<coord>; returns (mask, sign), sign 0 for a
  // repeated coordinate
  std::pair<IndexMask, int> parse_basis() {
    const Token& first = next();
    int i = coord_index(first.text.substr(1));
    const Token& caret = cur();
    expect(Tok::Caret, "'^'");
    if (cur().kind != Tok::Ident || cur().text.size() < 2 || cur().text[0] != 'd' ||
        coord_index(cur().text.substr(1)) < 0) {
      // report at the caret: the basis is malformed there
      throw ParseError("expected coordinate differential after '^'", caret.line, caret.col,
                       caret.text);
    }
    int j = coord_index(next().text.substr(1));
    if (i == j) return {0, 0};
    IndexMask mask = (IndexMask(1) << i) | (IndexMask(1) << j);
    return {mask, i < j ? 1 : -1};
  }

  // power := ['-'] atom ['^' nonnegative-integer]; unary minus binds
  // looser than exponentiation
  Polynomial parse_power() {
    if (cur().kind == Tok::Minus) {
      ++pos;
      return -parse_power();
    }
    Polynomial base = parse_atom();
    if (cur().kind == Tok::Caret) {
      ++pos;
      if (cur().kind != Tok::Number || cur().text.find('/') != std::string::npos)
        fail("expected integer exponent", cur());
      long e = std::stol(next().text);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    int n = static_cast<int>(coords.size());
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Number: {
        ++pos;
        return Polynomial::constant(n, rational_from_string(t.text));
      }
      case Tok::Ident: {
        int idx = coord_index(t.text);
        if (idx < 0) fail("unknown identifier", t);
        ++pos;
        return Polynomial::variable(n, idx);
      }
      case Tok::LParen: {
        ++pos;
        Polynomial e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail("expected polynomial factor", t);
    }
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_prod();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      bool neg = (next().kind == Tok::Minus);
      Polynomial rhs = parse_prod();
      acc = neg ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial parse_prod() {
    Polynomial acc = parse_power();
    while (cur().kind == Tok::Star) {
      ++pos;
      acc = acc * parse_power();
    }
    return acc;
  }
};

}  // namespace

StructureDoc parse_structure(const std::string& text) {
  Parser p(text);
  return p.parse_doc();
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& coords) {
  Parser p(text);
  p.coords = coords;
  Polynomial r = p.parse_expr();
  if (p.cur().kind != Tok::End) p.fail("unexpected trailing input", p.cur());
  return r;
}

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  return p.str(names);
}

std::string print_multivector(const Multivector& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  if (a.degree() == 0) return a.component(0).str(names);
  std::string s;
  for (IndexMask mask : multi_index_masks(a.nvars(), a.degree())) {
    Polynomial p = a.component(mask);
    if (p.is_zero()) continue;
    std::string basis;
    for (int i : mask_to_indices(mask)) {
      if (!basis.empty()) basis += "^";
      basis += "d" + names[i];
    }
    if (p.term_count() == 1) {
      const auto& [mono, c] = *p.terms().begin();
      Rational av = abs(c);
      std::string factor;
      if (!mono.is_one()) factor = monomial_to_string(mono, names);
      if (av != 1) factor = to_string(av) + (factor.empty() ? "" : "*" + factor);
      std::string head = factor.empty() ? basis : factor + "*" + basis;
      if (s.empty())
        s = (c < 0 ? "-" : "") + head;
      else
        s += (c < 0 ? " - " : " + ") + head;
    } else {
      std::string head = "(" + p.str(names) + ")*" + basis;
      s += s.empty() ? head : " + " + head;
    }
  }
  return s;
}

std::string print_structure(const StructureDoc& doc) {
  std::string s = "coords(";
  for (size_t i = 0; i < doc.coords.size(); ++i) {
    if (i) s += ",";
    s += doc.coords[i];
  }
  s += ")";
  if (doc.weights) {
    s += " weights(";
    for (size_t i = 0; i < doc.weights->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*doc.weights)[i]);
    }
    s += ")";
  }
  s += " " + print_multivector(doc.bivector, doc.coords);
  return s;
}

PoissonStructure to_poisson(const StructureDoc& doc, const std::string& name) {
  WeightVector w =
      doc.weights ? WeightVector(*doc.weights) : WeightVector::ones(static_cast<int>(doc.coords.size()));
  VolumeForm vol;
  vol.scale = doc.volume_scale;
  return PoissonStructure(name, doc.coords, doc.bivector, w, vol);
}

StructureDoc to_doc(const PoissonStructure& pi) {
  StructureDoc doc;
  doc.coords = pi.coords;
  if (!pi.weights.is_all_ones()) doc.weights = pi.weights.w;
  doc.bivector = pi.bivector;
  doc.volume_scale = pi.volume.scale;
  return doc;
}

}  // namespace poico
