#include "gkm/dsl.hpp"

#include <cctype>
#include <stdexcept>

#include "gkm/errors.hpp"

namespace gkm::dsl {

namespace {

constexpr int kMaxExponent = 1000;

// Recursive-descent parser over one line of text.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t varCount, std::size_t line, std::size_t column)
      : text_(text), varCount_(varCount), line_(line), column_(column) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expression();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_ + pos_, message); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[nodiscard]] char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial sum(varCount_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Polynomial t = term();
    sum += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = text_[pos_++] == '-';
      Polynomial next = term();
      sum += negate ? -next : next;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial product = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        product = product * factor();
      } else if (c == 't' || c == '(') {
        product = product * factor();
      } else {
        return product;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      const std::size_t start = pos_;
      const std::string digits = readDigits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 't') {
      ++pos_;
      const std::size_t start = pos_;
      const std::string digits = readDigits();
      if (digits.empty()) fail("expected variable index after 't'");
      const unsigned long index = digits.size() > 9 ? 0 : std::stoul(digits);
      if (index < 1 || index > varCount_) {
        pos_ = start - 1;
        fail("variable t" + digits + " out of range (rank " + std::to_string(varCount_) + ")");
      }
      return Polynomial::variable(varCount_, index - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = readDigits();
      if (peek() == '/') {
        ++pos_;
        skipSpace();
        const std::size_t start = pos_;
        const std::string den = readDigits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = start;
          fail("zero denominator");
        }
        literal += "/" + den;
      }
      return Polynomial::constant(varCount_, Rational::parse(literal));
    }
    if (c == '\0') fail("unexpected end of polynomial");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string readDigits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t varCount_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

Polynomial parsePolynomialAt(std::string_view text, std::size_t varCount, std::size_t line, std::size_t column) {
  return PolynomialParser(text, varCount, line, column).parse();
}

LinearForm parseLinearFormAt(std::string_view text, std::size_t varCount, std::size_t line, std::size_t column) {
  const Polynomial p = parsePolynomialAt(text, varCount, line, column);
  if (p.isZero()) throw ParseError(line, column, "edge direction must be nonzero");
  if (!p.isHomogeneous(1)) throw ParseError(line, column, "'" + p.str() + "' is not a linear form");
  return LinearForm::fromPolynomial(p);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '-';
}

std::string checkedName(const Token& t, std::size_t line) {
  for (std::size_t i = 0; i < t.text.size(); ++i) {
    if (!isNameChar(t.text[i])) {
      throw ParseError(line, t.column + i, "invalid character '" + std::string(1, t.text[i]) + "' in name");
    }
  }
  if (t.text == "pos") throw ParseError(line, t.column, "'pos' is reserved");
  return std::string(t.text);
}

Rational checkedRational(const Token& t, std::size_t line) {
  try {
    return Rational::parse(t.text);
  } catch (const std::exception&) {
    throw ParseError(line, t.column, "expected a rational number, got '" + std::string(t.text) + "'");
  }
}

std::vector<Rational> rationals(const std::vector<Token>& tokens, std::size_t from, std::size_t count,
                                std::size_t line, std::size_t endColumn) {
  if (tokens.size() - from != count) {
    const std::size_t col = tokens.size() > from ? tokens[from].column : endColumn;
    throw ParseError(line, col,
                     "expected " + std::to_string(count) + " coordinates, got " + std::to_string(tokens.size() - from));
  }
  std::vector<Rational> out;
  for (std::size_t i = from; i < tokens.size(); ++i) out.push_back(checkedRational(tokens[i], line));
  return out;
}

// Locates the declaration an offender string refers to.
SourceSpan locate(const GraphDocument& doc, const std::string& offender) {
  const auto& g = doc.graph;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const std::string label = edgeLabel(g.edges()[i]);
    if (offender.find(label) != std::string::npos) return doc.edges[i];
  }
  for (std::size_t i = g.vertices().size(); i-- > 0;) {
    if (offender == g.vertices()[i].name || offender.rfind(g.vertices()[i].name + ":", 0) == 0) {
      return doc.vertices[i];
    }
  }
  if (doc.xi) return *doc.xi;
  return doc.rank;
}

}  // namespace

Polynomial parsePolynomial(std::string_view text, std::size_t varCount) {
  return parsePolynomialAt(text, varCount, 1, 1);
}

LinearForm parseLinearForm(std::string_view text, std::size_t varCount) {
  return parseLinearFormAt(text, varCount, 1, 1);
}

GraphDocument parseGraphDocument(std::string_view text) {
  GraphDocument doc;
  bool haveRank = false;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    // Edge lines carry a free-form linear form after ':'.
    std::string_view head = line;
    std::string_view formText;
    std::size_t formColumn = 0;
    const auto tokensProbe = tokenize(line);
    if (tokensProbe.empty()) continue;
    const std::string_view keyword = tokensProbe.front().text;
    if (keyword == "edge") {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(lineNo, line.size() + 1, "expected ':' in edge");
      head = line.substr(0, colon);
      formText = line.substr(colon + 1);
      formColumn = colon + 2;
    }
    const auto tokens = tokenize(head);
    const std::size_t endColumn = head.size() + 1;

    if (keyword == "rank") {
      if (haveRank) throw ParseError(lineNo, tokens[0].column, "duplicate rank");
      if (tokens.size() != 2) throw ParseError(lineNo, endColumn, "expected 'rank <k>'");
      const auto& t = tokens[1];
      if (t.text.find_first_not_of("0123456789") != std::string_view::npos || t.text.size() > 3 ||
          std::stoi(std::string(t.text)) < 1) {
        throw ParseError(lineNo, t.column, "rank must be a positive integer");
      }
      doc.graph = MomentGraph(static_cast<std::size_t>(std::stoi(std::string(t.text))));
      doc.rank = SourceSpan{lineNo, tokens[0].column};
      haveRank = true;
      continue;
    }
    if (!haveRank) throw ParseError(lineNo, tokens[0].column, "'rank' must come first");
    const std::size_t k = doc.graph.rank();

    if (keyword == "vertex") {
      if (tokens.size() < 2) throw ParseError(lineNo, endColumn, "expected vertex name");
      std::string name = checkedName(tokens[1], lineNo);
      std::optional<std::vector<Rational>> pos;
      if (tokens.size() > 2) {
        if (tokens[2].text != "pos") throw ParseError(lineNo, tokens[2].column, "expected 'pos'");
        pos = rationals(tokens, 3, k, lineNo, endColumn);
      }
      doc.graph.addVertex(std::move(name), std::move(pos));
      doc.vertices.push_back(SourceSpan{lineNo, tokens[0].column});
    } else if (keyword == "edge") {
      if (tokens.size() != 3) throw ParseError(lineNo, tokens[0].column, "expected 'edge <south> <north> : <form>'");
      std::string south = checkedName(tokens[1], lineNo);
      std::string north = checkedName(tokens[2], lineNo);
      if (south == north) {
        throw ValidationError(kCheckAcyclic, "self-loop " + south + "->" + north + " (line " + std::to_string(lineNo) +
                                                 ")");
      }
      LinearForm direction = parseLinearFormAt(formText, k, lineNo, formColumn);
      doc.graph.addEdge(std::move(south), std::move(north), std::move(direction));
      doc.edges.push_back(SourceSpan{lineNo, tokens[0].column});
    } else if (keyword == "xi") {
      if (doc.xi) throw ParseError(lineNo, tokens[0].column, "duplicate xi");
      doc.graph.setXi(rationals(tokens, 1, k, lineNo, endColumn));
      doc.xi = SourceSpan{lineNo, tokens[0].column};
    } else {
      throw ParseError(lineNo, tokens[0].column, "unknown statement '" + std::string(keyword) + "'");
    }
  }
  if (!haveRank) throw ParseError(lineNo == 0 ? 1 : lineNo, 1, "missing 'rank'");

  const auto report = validate(doc.graph);
  if (const auto* failure = report.firstFailure()) {
    const std::string& offender = failure->offenders.front();
    const SourceSpan at = locate(doc, offender);
    throw ValidationError(failure->name, offender + " (line " + std::to_string(at.line) + ")");
  }
  return doc;
}

MomentGraph parseGraph(std::string_view text) { return parseGraphDocument(text).graph; }

std::string serializeGraph(const MomentGraph& g) {
  std::string out = "rank " + std::to_string(g.rank()) + "\n";
  for (const auto& v : g.vertices()) {
    out += "vertex " + v.name;
    if (v.position) {
      out += " pos";
      for (const auto& q : *v.position) out += " " + q.str();
    }
    out += "\n";
  }
  for (const auto& e : g.edges()) out += "edge " + e.south + " " + e.north + " : " + e.direction.str() + "\n";
  if (g.xi()) {
    out += "xi";
    for (const auto& q : *g.xi()) out += " " + q.str();
    out += "\n";
  }
  return out;
}

MomentGraph parseGraphAuto(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parseGraphJson(text);
  return parseGraph(text);
}

}  // namespace gkm::dsl
