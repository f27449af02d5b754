#include "lhd/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "lhd/instances.hpp"

namespace lhd::dsl {

ParseError::ParseError(Position at, const std::string& message)
    : Error("line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + message),
      at_(at),
      message_(message) {}

const std::vector<CheckSignature>& check_signatures() {
  using A = ArgType;
  static const std::vector<CheckSignature> table = {
      {"axioms", {A::any_definition}, 1},
      {"cosemisimple", {A::coalgebra}, 1},
      {"injective", {A::comodule}, 1},
      {"cotensor", {A::comodule, A::comodule, A::comodule}, 2},
      {"hom", {A::comodule, A::comodule}, 2},
      {"adjunction", {A::morphism, A::comodule, A::comodule, A::morphism, A::comodule}, 3},
      {"beck", {A::morphism, A::morphism, A::comodule}, 3},
      {"forall-beck", {A::morphism, A::morphism, A::comodule}, 3},
      {"frobenius", {A::morphism, A::comodule, A::comodule}, 3},
      {"ssmc", {A::morphism, A::comodule, A::comodule}, 3},
      {"lnl", {A::morphism, A::morphism}, 2},
      {"hyperdoctrine", {A::coalgebra, A::count, A::count}, 1},
  };
  return table;
}

std::vector<CheckDirective> Document::checks() const {
  std::vector<CheckDirective> out;
  for (const auto& s : statements)
    if (const auto* c = std::get_if<CheckDirective>(&s)) out.push_back(*c);
  return out;
}

namespace {

enum class Tok { ident, number, string, punct, arrow, newline, end };

struct Token {
  Tok type;
  std::string text;
  Position at;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  int depth = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const Position at = pos;
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().type != Tok::newline) out.push_back({Tok::newline, "\n", at});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && (ident_char(text[j]) || (text[j] == '-' && j + 1 < text.size() && ident_start(text[j + 1]))))
        ++j;
      out.push_back({Tok::ident, text.substr(i, j - i), at});
      advance(j - i);
    } else if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '/' && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      out.push_back({Tok::number, text.substr(i, j - i), at});
      advance(j - i);
    } else if (c == '"') {
      std::string s;
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < text.size()) ++j;
        s += text[j++];
      }
      if (j >= text.size() || text[j] != '"') throw ParseError(at, "unterminated string");
      out.push_back({Tok::string, s, at});
      advance(j + 1 - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", at});
      advance(2);
    } else if (std::string("=()[]{},:;").find(c) != std::string::npos) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') depth = depth > 0 ? depth - 1 : 0;
      out.push_back({Tok::punct, std::string(1, c), at});
      advance(1);
    } else {
      throw ParseError(at, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

std::string describe(const Token& t) {
  switch (t.type) {
    case Tok::newline:
      return "end of line";
    case Tok::end:
      return "end of input";
    case Tok::string:
      return "\"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Document run() {
    while (peek().type != Tok::end) {
      if (peek().type == Tok::newline) {
        next();
        continue;
      }
      statement();
      if (peek().type != Tok::end) expect(Tok::newline, "", "end of line");
    }
    if (!have_field_) throw ParseError(peek().at, "missing field declaration");
    return std::move(doc_);
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  bool at(Tok type, const std::string& text = "") const {
    return peek().type == type && (text.empty() || peek().text == text);
  }

  Token expect(Tok type, const std::string& text, const std::string& what) {
    if (!at(type, text)) throw ParseError(peek().at, "expected " + what + ", found " + describe(peek()));
    return next();
  }
  void punct(const char* p) { expect(Tok::punct, p, std::string("'") + p + "'"); }
  void keyword(const char* k) { expect(Tok::ident, k, std::string("'") + k + "'"); }

  Token name() { return expect(Tok::ident, "", "a name"); }

  std::string label() {
    if (at(Tok::ident) || at(Tok::string) || at(Tok::number)) return next().text;
    throw ParseError(peek().at, "expected a label, found " + describe(peek()));
  }

  std::size_t natural() {
    const Token t = expect(Tok::number, "", "a natural number");
    if (t.text.find_first_of("-/") != std::string::npos) throw ParseError(t.at, "expected a natural number");
    return std::stoul(t.text);
  }

  mpq_class rational() {
    const Token t = expect(Tok::number, "", "a number");
    mpq_class q(t.text);
    if (q.get_den() == 0) throw ParseError(t.at, "zero denominator");
    q.canonicalize();
    return q;
  }

  Literal literal() {
    punct("[");
    Literal rows;
    if (at(Tok::punct, "[")) {
      do {
        punct("[");
        rows.push_back(row());
        punct("]");
      } while (at(Tok::punct, ",") && (next(), true));
    } else {
      rows.push_back(row());
    }
    punct("]");
    return rows;
  }

  std::vector<mpq_class> row() {
    std::vector<mpq_class> r;
    if (at(Tok::punct, "]")) return r;
    r.push_back(rational());
    while (at(Tok::punct, ",")) {
      next();
      r.push_back(rational());
    }
    return r;
  }

  std::vector<std::string> label_set() {
    punct("{");
    std::vector<std::string> out;
    if (!at(Tok::punct, "}")) {
      out.push_back(label());
      while (at(Tok::punct, ",")) {
        next();
        out.push_back(label());
      }
    }
    punct("}");
    return out;
  }

  Matrix build(const Literal& lit, std::size_t rows, std::size_t cols, const Position& where, const std::string& what) {
    if (lit.size() != rows) throw ParseError(where, what + " needs " + std::to_string(rows) + " rows, got " +
                                                        std::to_string(lit.size()));
    Matrix m(doc_.field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (lit[i].size() != cols)
        throw ParseError(where, what + " row " + std::to_string(i) + " needs " + std::to_string(cols) +
                                    " entries, got " + std::to_string(lit[i].size()));
      for (std::size_t j = 0; j < cols; ++j) {
        try {
          m.set(i, j, lit[i][j]);
        } catch (const std::exception&) {
          throw ParseError(where, what + ": " + lit[i][j].get_str() + " is not in " + doc_.field.name());
        }
      }
    }
    return m;
  }

  void fresh(const Token& t) {
    if (doc_.coalgebras.count(t.text) || doc_.morphisms.count(t.text) || doc_.comodules.count(t.text))
      throw ParseError(t.at, "'" + t.text + "' is already defined");
  }

  const Coalgebra& coalgebra_ref() {
    const Token t = name();
    auto it = doc_.coalgebras.find(t.text);
    if (it == doc_.coalgebras.end()) throw ParseError(t.at, "no coalgebra named '" + t.text + "'");
    return it->second;
  }

  void require_field(const Position& where) {
    if (!have_field_) throw ParseError(where, "the field must be declared before any definition");
  }

  template <class F>
  auto constructing(const Position& where, const std::string& name, F&& make) {
    try {
      return make();
    } catch (const AxiomViolation& e) {
      throw ParseError(where, name + " violates " + e.axiom() + " at basis vector " + std::to_string(e.basis_index()));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(where, name + ": " + e.what());
    }
  }

  void statement() {
    const Token kw = expect(Tok::ident, "", "a statement");
    doc_.positions.push_back(kw.at);
    if (kw.text == "field") return field(kw);
    require_field(kw.at);
    if (kw.text == "coalg") return coalg(kw);
    if (kw.text == "morph") return morph(kw);
    if (kw.text == "comod") return comod(kw);
    if (kw.text == "check") return check(kw);
    throw ParseError(kw.at, "unknown statement '" + kw.text + "'");
  }

  void field(const Token& kw) {
    if (have_field_) throw ParseError(kw.at, "a document declares its field once");
    FieldDecl f;
    const Token t = expect(Tok::ident, "", "'Q' or 'Fp'");
    if (t.text == "Fp") {
      const Token p = peek();
      f.prime = static_cast<std::uint32_t>(natural());
      try {
        doc_.field = Field::prime(f.prime);
      } catch (const std::exception& e) {
        throw ParseError(p.at, e.what());
      }
    } else if (t.text != "Q") {
      throw ParseError(t.at, "expected 'Q' or 'Fp', found '" + t.text + "'");
    }
    have_field_ = true;
    doc_.statements.emplace_back(f);
  }

  void coalg(const Token& kw) {
    CoalgDef d;
    const Token n = name();
    fresh(n);
    d.name = n.text;
    punct("=");
    const Token k = expect(Tok::ident, "", "a coalgebra constructor");
    Coalgebra c = trivial_coalgebra(doc_.field);
    if (k.text == "grouplike") {
      d.kind = CoalgDef::Kind::grouplike;
      d.labels = label_set();
      c = constructing(kw.at, d.name, [&] { return grouplike_coalgebra(doc_.field, d.labels); });
    } else if (k.text == "sum" || k.text == "product") {
      d.kind = k.text == "sum" ? CoalgDef::Kind::sum : CoalgDef::Kind::product;
      punct("(");
      const Token l = peek();
      const Coalgebra a = coalgebra_ref();
      punct(",");
      const Token r = peek();
      const Coalgebra b = coalgebra_ref();
      punct(")");
      d.left = l.text;
      d.right = r.text;
      c = d.kind == CoalgDef::Kind::sum ? direct_sum(a, b) : product(a, b).coalgebra;
    } else if (k.text == "raw") {
      d.kind = CoalgDef::Kind::raw;
      keyword("dim");
      punct("=");
      d.dim = natural();
      keyword("delta");
      punct("=");
      d.delta = literal();
      keyword("eps");
      punct("=");
      d.eps = literal();
      if (at(Tok::ident, "labels")) {
        next();
        punct("=");
        d.labels = label_set();
      }
      if (d.dim == 0) throw ParseError(k.at, "a coalgebra needs dim >= 1");
      Matrix delta = build(d.delta, d.dim * d.dim, d.dim, k.at, "delta");
      Matrix eps = build(d.eps, 1, d.dim, k.at, "eps");
      c = constructing(kw.at, d.name, [&] { return Coalgebra(std::move(delta), std::move(eps), d.labels); });
    } else {
      throw ParseError(k.at, "unknown coalgebra constructor '" + k.text + "'");
    }
    doc_.coalgebras.emplace(d.name, std::move(c));
    doc_.statements.emplace_back(std::move(d));
  }

  void morph(const Token& kw) {
    MorphDef d;
    const Token n = name();
    fresh(n);
    d.name = n.text;
    punct(":");
    const Token s = peek();
    const Coalgebra src = coalgebra_ref();
    expect(Tok::arrow, "", "'->'");
    const Token t = peek();
    const Coalgebra tgt = coalgebra_ref();
    d.source = s.text;
    d.target = t.text;
    punct("{");
    Matrix m(doc_.field, tgt.dim(), src.dim());
    if (at(Tok::punct, "[")) {
      const Position where = peek().at;
      d.matrix = literal();
      m = build(d.matrix, tgt.dim(), src.dim(), where, "matrix");
    } else {
      d.by_labels = true;
      std::set<std::size_t> seen;
      do {
        if (!d.label_map.empty()) next();
        const Token from = peek();
        const std::string a = label();
        expect(Tok::arrow, "", "'->'");
        const Token to = peek();
        const std::string b = label();
        const auto i = src.label_index(a);
        if (!i) throw ParseError(from.at, "'" + d.source + "' has no label '" + a + "'");
        const auto j = tgt.label_index(b);
        if (!j) throw ParseError(to.at, "'" + d.target + "' has no label '" + b + "'");
        if (!seen.insert(*i).second) throw ParseError(from.at, "label '" + a + "' is mapped twice");
        m.set(*j, *i, 1);
        d.label_map.emplace_back(a, b);
      } while (at(Tok::punct, ","));
      if (seen.size() != src.dim()) throw ParseError(kw.at, "the label map of '" + d.name + "' is not total");
    }
    punct("}");
    doc_.morphisms.emplace(d.name, constructing(kw.at, d.name, [&] { return CoalgebraMorphism(src, tgt, m); }));
    doc_.statements.emplace_back(std::move(d));
  }

  void comod(const Token& kw) {
    ComodDef d;
    const Token n = name();
    fresh(n);
    d.name = n.text;
    keyword("over");
    const Token b = peek();
    const Coalgebra base = coalgebra_ref();
    d.base = b.text;
    punct("{");
    std::optional<Comodule> v;
    if (at(Tok::ident, "graded")) {
      next();
      d.graded = true;
      if (!base.is_grouplike()) throw ParseError(b.at, "graded comodules need a group-like base");
      std::vector<std::size_t> dims(base.dim(), 0);
      punct("{");
      std::set<std::size_t> seen;
      while (!at(Tok::punct, "}")) {
        if (!d.grades.empty()) punct(",");
        const Token l = peek();
        const std::string x = label();
        punct(":");
        const std::size_t k = natural();
        const auto i = base.label_index(x);
        if (!i) throw ParseError(l.at, "'" + d.base + "' has no label '" + x + "'");
        if (!seen.insert(*i).second) throw ParseError(l.at, "label '" + x + "' is graded twice");
        dims[*i] = k;
        d.grades.emplace_back(x, k);
      }
      punct("}");
      v = graded_comodule(base, dims);
    } else {
      keyword("dim");
      d.dim = natural();
      punct(";");
      keyword("rho");
      punct("=");
      const Position where = peek().at;
      d.rho = literal();
      Matrix rho = build(d.rho, d.dim * base.dim(), d.dim, where, "rho");
      v = constructing(kw.at, d.name, [&] { return Comodule(base, std::move(rho)); });
    }
    punct("}");
    doc_.comodules.emplace(d.name, std::move(*v));
    doc_.statements.emplace_back(std::move(d));
  }

  void check(const Token& kw) {
    CheckDirective d;
    const Token k = expect(Tok::ident, "", "a check kind");
    const CheckSignature* sig = nullptr;
    for (const auto& s : check_signatures())
      if (s.kind == k.text) sig = &s;
    if (!sig) throw ParseError(k.at, "unknown check kind '" + k.text + "'");
    d.kind = k.text;
    while (!at(Tok::newline) && !at(Tok::end)) {
      const Token a = peek();
      if (d.args.size() >= sig->params.size())
        throw ParseError(a.at, "'" + d.kind + "' takes at most " + std::to_string(sig->params.size()) + " arguments");
      const ArgType type = sig->params[d.args.size()];
      if (type == ArgType::count) {
        d.args.push_back(std::to_string(natural()));
        continue;
      }
      name();
      const bool is_c = doc_.coalgebras.count(a.text), is_m = doc_.morphisms.count(a.text),
                 is_v = doc_.comodules.count(a.text);
      if (!is_c && !is_m && !is_v) throw ParseError(a.at, "'" + a.text + "' is not defined");
      const bool fits = type == ArgType::any_definition || (type == ArgType::coalgebra && is_c) ||
                        (type == ArgType::morphism && is_m) || (type == ArgType::comodule && is_v);
      if (!fits) {
        static const char* names[] = {"a coalgebra", "a morphism", "a comodule", "a definition", "a number"};
        throw ParseError(a.at, "argument " + std::to_string(d.args.size() + 1) + " of '" + d.kind + "' must be " +
                                   names[static_cast<int>(type)]);
      }
      d.args.push_back(a.text);
    }
    if (d.args.size() < sig->required)
      throw ParseError(kw.at, "'" + d.kind + "' needs at least " + std::to_string(sig->required) + " arguments");
    doc_.statements.emplace_back(std::move(d));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Document doc_;
  bool have_field_ = false;
};

bool plain_label(const std::string& s) {
  if (s.empty()) return false;
  if (std::all_of(s.begin(), s.end(), digit)) return true;
  if (!ident_start(s[0])) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!ident_char(s[i])) return false;
  return true;
}

std::string show_label(const std::string& s) {
  if (plain_label(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string show_labels(const std::vector<std::string>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? ", " : "") + show_label(ls[i]);
  return out + "}";
}

std::string show(const Literal& lit) {
  std::string out = "[";
  for (std::size_t i = 0; i < lit.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < lit[i].size(); ++j) out += (j ? ", " : "") + lit[i][j].get_str();
    out += "]";
  }
  return out + "]";
}

struct Printer {
  std::ostream& os;

  void operator()(const FieldDecl& f) const {
    os << "field " << (f.prime ? "Fp " + std::to_string(f.prime) : "Q");
  }
  void operator()(const CoalgDef& d) const {
    os << "coalg " << d.name << " = ";
    switch (d.kind) {
      case CoalgDef::Kind::grouplike:
        os << "grouplike " << show_labels(d.labels);
        break;
      case CoalgDef::Kind::sum:
        os << "sum(" << d.left << ", " << d.right << ")";
        break;
      case CoalgDef::Kind::product:
        os << "product(" << d.left << ", " << d.right << ")";
        break;
      case CoalgDef::Kind::raw:
        os << "raw dim=" << d.dim << " delta=" << show(d.delta) << " eps=" << show(d.eps);
        if (!d.labels.empty()) os << " labels=" << show_labels(d.labels);
        break;
    }
  }
  void operator()(const MorphDef& d) const {
    os << "morph " << d.name << " : " << d.source << " -> " << d.target << " { ";
    if (d.by_labels) {
      for (std::size_t i = 0; i < d.label_map.size(); ++i)
        os << (i ? ", " : "") << show_label(d.label_map[i].first) << " -> " << show_label(d.label_map[i].second);
    } else {
      os << show(d.matrix);
    }
    os << " }";
  }
  void operator()(const ComodDef& d) const {
    os << "comod " << d.name << " over " << d.base << " { ";
    if (d.graded) {
      os << "graded {";
      for (std::size_t i = 0; i < d.grades.size(); ++i)
        os << (i ? ", " : "") << show_label(d.grades[i].first) << ": " << d.grades[i].second;
      os << "}";
    } else {
      os << "dim " << d.dim << "; rho = " << show(d.rho);
    }
    os << " }";
  }
  void operator()(const CheckDirective& d) const {
    os << "check " << d.kind;
    for (const auto& a : d.args) os << " " << a;
  }
};

}  // namespace

Document parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Document& doc) {
  std::ostringstream os;
  for (const auto& s : doc.statements) {
    std::visit(Printer{os}, s);
    os << "\n";
  }
  return os.str();
}

}  // namespace lhd::dsl
