#include "twocat/morfile.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twocat/biproduct.hpp"
#include "twocat/errors.hpp"

namespace twocat::morfile {

struct Expr {
  enum class Kind { name, nat, call, binary };
  Kind kind = Kind::name;
  std::string text;  ///< identifier, digits, builder name or ASCII operator
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

namespace {

using ExprPtr = std::shared_ptr<const Expr>;

// -- lexer ---------------------------------------------------------------------

enum class Tok {
  ident, nat, arrow, darrow, equals, colon, semi, comma,
  lbracket, rbracket, lbrace, rbrace, lparen, rparen,
  minus, slash, plus, hcomp, hcomp2, vcomp, oplus, newline, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line = 1) : src_(src), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (true) {
      skip_blanks();
      if (pos_ >= src_.size()) break;
      const std::size_t l = line_, c = col_;
      const char ch = src_[pos_];
      if (ch == '\n') {
        advance(1);
        if (depth == 0 && (out.empty() || out.back().kind != Tok::newline))
          out.push_back({Tok::newline, "\n", l, c});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t n = 0;
        while (pos_ + n < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_ + n])) || src_[pos_ + n] == '_' ||
                src_[pos_ + n] == '\''))
          ++n;
        out.push_back({Tok::ident, std::string(src_.substr(pos_, n)), l, c});
        advance(n);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t n = 0;
        while (pos_ + n < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + n]))) ++n;
        out.push_back({Tok::nat, std::string(src_.substr(pos_, n)), l, c});
        advance(n);
        continue;
      }
      if (auto t = symbol()) {
        if (t->kind == Tok::lbracket || t->kind == Tok::lbrace || t->kind == Tok::lparen) ++depth;
        if (t->kind == Tok::rbracket || t->kind == Tok::rbrace || t->kind == Tok::rparen) --depth;
        t->line = l;
        t->column = c;
        out.push_back(*t);
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, ch) + "'", l, c);
    }
    out.push_back({Tok::end, "", line_, col_});
    return out;
  }

 private:
  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i, ++pos_) {
      const auto b = static_cast<unsigned char>(src_[pos_]);
      if (b == '\n') {
        ++line_;
        col_ = 1;
      } else if ((b & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  void skip_blanks() {
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        advance(1);
      } else if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  std::optional<Token> symbol() {
    struct Sym {
      std::string_view spelling;
      Tok kind;
      std::string_view text;
    };
    // Longest spellings first.
    static constexpr Sym table[] = {
        {"(+)", Tok::oplus, "(+)"},   {".h2", Tok::hcomp2, ".h2"}, {"∘₂", Tok::hcomp2, ".h2"},
        {".h", Tok::hcomp, ".h"},     {".v", Tok::vcomp, ".v"},    {"∘", Tok::hcomp, ".h"},
        {"⊙", Tok::vcomp, ".v"}, {"⊕", Tok::oplus, "(+)"}, {"->", Tok::arrow, "->"},
        {"=>", Tok::darrow, "=>"},    {"π", Tok::ident, "pi"}, {"ν", Tok::ident, "nu"},
        {"θ", Tok::ident, "theta"}, {"=", Tok::equals, "="}, {":", Tok::colon, ":"},
        {";", Tok::semi, ";"},        {",", Tok::comma, ","},      {"[", Tok::lbracket, "["},
        {"]", Tok::rbracket, "]"},    {"{", Tok::lbrace, "{"},     {"}", Tok::rbrace, "}"},
        {"(", Tok::lparen, "("},      {")", Tok::rparen, ")"},     {"-", Tok::minus, "-"},
        {"/", Tok::slash, "/"},       {"+", Tok::plus, "+"},
    };
    for (const Sym& s : table)
      if (starts(s.spelling)) {
        advance(s.spelling.size());
        return Token{s.kind, std::string(s.text), 0, 0};
      }
    return std::nullopt;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

// -- parser --------------------------------------------------------------------

struct RawMatrix {
  std::vector<std::vector<Rational>> rows;
  std::size_t line = 0, column = 0;
};

struct RawRef {
  std::string text;
  bool is_nat = false;
  std::size_t line = 0, column = 0;
};

struct RawDecl {
  enum class Kind { obj, mat, one, two, let } kind;
  std::string name;
  std::size_t line = 0, column = 0;
  std::size_t nat = 0;  // obj
  RawRef src, tgt;      // mat, one (objects); two (1-morphism names)
  RawMatrix matrix;     // mat
  std::vector<std::vector<Decomp>> decomp_rows;     // one
  std::vector<std::vector<RawMatrix>> matrix_rows;  // two
  bool empty_grid = false;
  std::size_t grid_line = 0, grid_column = 0;
  ExprPtr expr;  // let
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<RawDecl> document() {
    std::vector<RawDecl> out;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::end) break;
      out.push_back(declaration());
      if (peek().kind != Tok::end) expect(Tok::newline, "end of line");
    }
    return out;
  }

  ExprPtr standalone_expr() {
    skip_newlines();
    ExprPtr e = expr();
    skip_newlines();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      fail(std::string("expected ") + what + (peek().kind == Tok::end ? " before end of input"
                                                                      : ", found '" + printable(peek()) + "'"));
    return take();
  }
  static std::string printable(const Token& t) { return t.kind == Tok::newline ? "end of line" : t.text; }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }

  std::size_t natural() {
    const Token& t = expect(Tok::nat, "a natural number");
    try {
      return std::stoul(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range", t.line, t.column);
    }
  }

  RawDecl declaration() {
    const Token& kw = expect(Tok::ident, "a declaration (obj, mat, one, two, let)");
    RawDecl d;
    d.line = kw.line;
    d.column = kw.column;
    const Token& name = expect(Tok::ident, "a name");
    d.name = name.text;
    if (kw.text == "obj") {
      d.kind = RawDecl::Kind::obj;
      expect(Tok::equals, "'='");
      d.nat = natural();
    } else if (kw.text == "mat" || kw.text == "one") {
      d.kind = kw.text == "mat" ? RawDecl::Kind::mat : RawDecl::Kind::one;
      expect(Tok::colon, "':'");
      d.src = ref();
      expect(Tok::arrow, "'->'");
      d.tgt = ref();
      expect(Tok::equals, "'='");
      if (d.kind == RawDecl::Kind::mat)
        d.matrix = matrix();
      else
        grid(d, [&] { return decomp(); }, d.decomp_rows);
    } else if (kw.text == "two") {
      d.kind = RawDecl::Kind::two;
      expect(Tok::colon, "':'");
      d.src = ref();
      expect(Tok::darrow, "'=>'");
      d.tgt = ref();
      expect(Tok::equals, "'='");
      grid(d, [&] { return matrix(); }, d.matrix_rows);
    } else if (kw.text == "let") {
      d.kind = RawDecl::Kind::let;
      expect(Tok::equals, "'='");
      d.expr = expr();
    } else {
      throw ParseError("unknown declaration '" + kw.text + "'", kw.line, kw.column);
    }
    return d;
  }

  RawRef ref() {
    const Token& t = peek();
    if (t.kind != Tok::nat && t.kind != Tok::ident) fail("expected a natural number or a name");
    take();
    return {t.text, t.kind == Tok::nat, t.line, t.column};
  }

  template <class Item, class F>
  void grid(RawDecl& d, F item, std::vector<std::vector<Item>>& rows) {
    const Token& open = expect(Tok::lbracket, "'['");
    d.grid_line = open.line;
    d.grid_column = open.column;
    if (accept(Tok::rbracket)) {
      d.empty_grid = true;
      return;
    }
    rows.emplace_back();
    while (true) {
      if (accept(Tok::rbracket)) break;
      if (accept(Tok::semi)) {
        rows.emplace_back();
        continue;
      }
      rows.back().push_back(item());
    }
    for (const auto& r : rows)
      if (r.size() != rows.front().size())
        throw ParseError("ragged grid: rows have different lengths", open.line, open.column);
  }

  Decomp decomp() {
    expect(Tok::lbracket, "'[' starting a decomposition");
    std::vector<std::size_t> dims;
    if (!accept(Tok::rbracket)) {
      do dims.push_back(natural());
      while (accept(Tok::comma));
      expect(Tok::rbracket, "',' or ']'");
    }
    return Decomp(std::move(dims));
  }

  RawMatrix matrix() {
    const Token& open = expect(Tok::lbrace, "'{' starting a matrix");
    RawMatrix m;
    m.line = open.line;
    m.column = open.column;
    if (accept(Tok::rbrace)) return m;
    m.rows.emplace_back();
    while (true) {
      if (accept(Tok::rbrace)) break;
      if (accept(Tok::semi)) {
        m.rows.emplace_back();
        continue;
      }
      m.rows.back().push_back(rational());
    }
    for (const auto& r : m.rows)
      if (r.size() != m.rows.front().size() || r.empty())
        throw ParseError("ragged matrix literal", open.line, open.column);
    return m;
  }

  Rational rational() {
    const Token& start = peek();
    const bool neg = accept(Tok::minus);
    const Token& num = expect(Tok::nat, "a rational entry");
    std::string text = (neg ? "-" : "") + num.text;
    if (accept(Tok::slash)) {
      const Token& den = expect(Tok::nat, "a denominator");
      text += "/" + den.text;
    }
    try {
      return Rational::parse(text);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start.line, start.column);
    }
  }

  // expr := sum ; sum := vert ('+' vert)* ; vert := dsum ('.v' dsum)* ;
  // dsum := horiz ('(+)' horiz)* ; horiz := atom (('.h' | '.h2') atom)*
  ExprPtr expr() { return binary_level(0); }

  ExprPtr binary_level(int level) {
    static constexpr Tok ops[4][2] = {
        {Tok::plus, Tok::plus}, {Tok::vcomp, Tok::vcomp}, {Tok::oplus, Tok::oplus}, {Tok::hcomp, Tok::hcomp2}};
    if (level == 4) return atom();
    ExprPtr lhs = binary_level(level + 1);
    while (peek().kind == ops[level][0] || peek().kind == ops[level][1]) {
      const Token& op = take();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::binary;
      node->text = op.text;
      node->line = op.line;
      node->column = op.column;
      node->args = {lhs, binary_level(level + 1)};
      lhs = node;
    }
    return lhs;
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (accept(Tok::lparen)) {
      ExprPtr e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    auto node = std::make_shared<Expr>();
    node->line = t.line;
    node->column = t.column;
    node->text = t.text;
    if (accept(Tok::nat)) {
      node->kind = Expr::Kind::nat;
      return node;
    }
    if (!accept(Tok::ident)) fail(t.kind == Tok::end ? "expected an expression" : "expected an expression, found '" + printable(t) + "'");
    if (accept(Tok::lparen)) {
      node->kind = Expr::Kind::call;
      if (!accept(Tok::rparen)) {
        do node->args.push_back(expr());
        while (accept(Tok::comma));
        expect(Tok::rparen, "',' or ')'");
      }
    }
    return node;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

ExprPtr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).standalone_expr(); }

// -- expression printing ---------------------------------------------------------

int precedence(const std::string& op) {
  if (op == "+") return 1;
  if (op == ".v") return 2;
  if (op == "(+)") return 3;
  return 4;
}

std::string format(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::name:
    case Expr::Kind::nat:
      return e.text;
    case Expr::Kind::call: {
      std::string s = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + format(*e.args[i]);
      return s + ")";
    }
    case Expr::Kind::binary: {
      const int p = precedence(e.text);
      auto side = [&](const Expr& c, bool right) {
        const bool wrap = c.kind == Expr::Kind::binary &&
                          (precedence(c.text) < p || (right && precedence(c.text) == p));
        return wrap ? "(" + format(c) + ")" : format(c);
      };
      return side(*e.args[0], false) + " " + e.text + " " + side(*e.args[1], true);
    }
  }
  return {};
}

// -- evaluation ----------------------------------------------------------------

class Evaluator {
 public:
  explicit Evaluator(const Document& doc) : doc_(doc) {}

  Value eval(const Expr& e) {
    try {
      return dispatch(e);
    } catch (const located&) {
      throw;
    } catch (const ShapeError& err) {
      throw located(at(e) + err.what());
    } catch (const NotInvertible& err) {
      throw located(at(e) + err.what());
    }
  }

  // ShapeError already carrying a location.
  struct located : ShapeError {
    using ShapeError::ShapeError;
  };

 private:
  static std::string at(const Expr& e) {
    return std::to_string(e.line) + ":" + std::to_string(e.column) + ": ";
  }

  Value dispatch(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::nat:
        return static_cast<std::size_t>(std::stoul(e.text));
      case Expr::Kind::name:
        return lookup(e);
      case Expr::Kind::call:
        return call(e);
      case Expr::Kind::binary:
        return binary(e);
    }
    throw ShapeError("bad expression");
  }

  Value lookup(const Expr& e) {
    const std::string& n = e.text;
    if (auto it = doc_.objects().find(n); it != doc_.objects().end()) return it->second;
    if (auto it = doc_.mats().find(n); it != doc_.mats().end()) return it->second.value;
    if (auto it = doc_.ones().find(n); it != doc_.ones().end()) return it->second.value;
    if (auto it = doc_.twos().find(n); it != doc_.twos().end()) return it->second.value;
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    for (const LetDecl& l : doc_.lets())
      if (l.name == n) {
        if (!active_.insert(n).second) throw ShapeError("let '" + n + "' refers to itself");
        Value v = eval(*l.expr);
        active_.erase(n);
        cache_.emplace(n, v);
        return v;
      }
    throw ShapeError("unknown name '" + n + "'");
  }

  template <class T>
  static const T& as(const Value& v, const char* what) {
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw ShapeError(std::string("expected ") + what + ", got " + kind_name(v));
  }

  static TwoMor promote(const Value& v) {
    if (const auto* f = std::get_if<OneMor>(&v)) return id_two(*f);
    return as<TwoMor>(v, "a 1- or 2-morphism");
  }

  Value binary(const Expr& e) {
    const Value l = eval(*e.args[0]);
    const Value r = eval(*e.args[1]);
    const std::string& op = e.text;
    if (op == ".h") {
      if (std::holds_alternative<matcat::MatMor>(l))
        return matcat::compose(std::get<matcat::MatMor>(l), as<matcat::MatMor>(r, "a matrix"));
      if (std::holds_alternative<OneMor>(l) && std::holds_alternative<OneMor>(r))
        return hcompose1(std::get<OneMor>(l), std::get<OneMor>(r));
      return hcompose2(promote(l), promote(r));
    }
    if (op == ".h2") return hcompose2(promote(l), promote(r));
    if (op == ".v") return vcompose2(as<TwoMor>(l, "a 2-morphism"), as<TwoMor>(r, "a 2-morphism"));
    if (op == "(+)") {
      if (const auto* n = std::get_if<std::size_t>(&l)) return *n + as<std::size_t>(r, "an object");
      if (const auto* a = std::get_if<matcat::MatMor>(&l))
        return matcat::oplus(*a, as<matcat::MatMor>(r, "a matrix"));
      if (const auto* f = std::get_if<OneMor>(&l)) return oplus_one(*f, as<OneMor>(r, "a 1-morphism"));
      return oplus_two(as<TwoMor>(l, "a morphism"), as<TwoMor>(r, "a 2-morphism"));
    }
    // "+"
    if (const auto* a = std::get_if<matcat::MatMor>(&l))
      return matcat::add_via_biproduct(*a, as<matcat::MatMor>(r, "a matrix"));
    return add_two(as<TwoMor>(l, "a 2-morphism or matrix"), as<TwoMor>(r, "a 2-morphism"));
  }

  static void arity(const Expr& e, std::size_t n) {
    if (e.args.size() != n)
      throw ShapeError(e.text + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                       std::to_string(e.args.size()));
  }

  Side side_arg(const Expr& e) {
    const std::size_t s = as<std::size_t>(eval(e), "1 or 2");
    if (s != 1 && s != 2) throw ShapeError("side must be 1 or 2");
    return s == 1 ? Side::first : Side::second;
  }

  Value call(const Expr& e) {
    const std::string& fn = e.text;
    auto arg = [&](std::size_t i) { return eval(*e.args[i]); };
    if (fn == "id") {
      arity(e, 1);
      const Value v = arg(0);
      if (const auto* n = std::get_if<std::size_t>(&v)) return id_one(*n);
      return id_two(as<OneMor>(v, "an object or 1-morphism"));
    }
    if (fn == "zero") {
      arity(e, 2);
      const Value a = arg(0), b = arg(1);
      if (const auto* n = std::get_if<std::size_t>(&a)) return zero_one(*n, as<std::size_t>(b, "an object"));
      return zero_two(as<OneMor>(a, "an object or 1-morphism"), as<OneMor>(b, "a 1-morphism"));
    }
    if (fn == "p" || fn == "i") {
      arity(e, 3);
      const std::size_t n = as<std::size_t>(arg(0), "an object"), m = as<std::size_t>(arg(1), "an object");
      const Side s = side_arg(*e.args[2]);
      return fn == "p" ? biproduct::box_proj(n, m, s) : biproduct::box_inj(n, m, s);
    }
    if (fn == "pi" || fn == "nu") {
      arity(e, 3);
      const OneMor f = as<OneMor>(arg(0), "a 1-morphism"), g = as<OneMor>(arg(1), "a 1-morphism");
      const Side s = side_arg(*e.args[2]);
      return fn == "pi" ? local_proj(f, g, s) : local_inj(f, g, s);
    }
    if (fn == "theta") {
      arity(e, 3);
      const std::size_t n = as<std::size_t>(arg(0), "an object"), m = as<std::size_t>(arg(1), "an object");
      const Expr& which = *e.args[2];
      const biproduct::Witness w = biproduct::make_witness(n, m);
      if (which.kind == Expr::Kind::name) {
        if (which.text == "A") return w.theta_a;
        if (which.text == "B") return w.theta_b;
        if (which.text == "AB") return w.theta_ab;
        if (which.text == "BA") return w.theta_ba;
        if (which.text == "P") return w.theta_p;
      }
      throw ShapeError("theta selector must be one of A, B, AB, BA, P");
    }
    if (fn == "norm") {
      arity(e, 1);
      const Value v = arg(0);
      if (const auto* f = std::get_if<OneMor>(&v)) return normalize(*f).normal;
      return normalize(as<TwoMor>(v, "a 1- or 2-morphism"));
    }
    if (fn == "inv") {
      arity(e, 1);
      const Value v = arg(0);
      if (const auto* a = std::get_if<matcat::MatMor>(&v)) {
        if (auto r = matcat::invert(*a)) return *r;
        throw NotInvertible("matrix is not invertible");
      }
      return inverse_of(as<TwoMor>(v, "a 2-morphism or matrix"));
    }
    if (fn == "assoc" || fn == "dist" || fn == "distr") {
      arity(e, 3);
      const OneMor a = as<OneMor>(arg(0), "a 1-morphism"), b = as<OneMor>(arg(1), "a 1-morphism"),
                   c = as<OneMor>(arg(2), "a 1-morphism");
      if (fn == "assoc") return associator(a, b, c);
      return fn == "dist" ? distributor(a, b, c).alpha : distributor_right(a, b, c).alpha;
    }
    throw ShapeError("unknown builder '" + fn + "'");
  }

  const Document& doc_;
  std::map<std::string, Value> cache_;
  std::set<std::string> active_;
};

std::string loc(std::size_t line, std::size_t column) {
  return std::to_string(line) + ":" + std::to_string(column) + ": ";
}

}  // namespace

// -- Document --------------------------------------------------------------------

bool Document::has(const std::string& name) const {
  return objects_.count(name) || mats_.count(name) || ones_.count(name) || twos_.count(name) ||
         std::any_of(lets_.begin(), lets_.end(), [&](const LetDecl& l) { return l.name == name; });
}

void Document::claim(const std::string& name, std::size_t line) {
  if (has(name)) throw ParseError("duplicate name '" + name + "'", line, 1);
}

void Document::add_object(const std::string& name, std::size_t n) {
  claim(name);
  objects_.emplace(name, n);
}

void Document::add_mat(const std::string& name, const matcat::MatMor& a) {
  claim(name);
  mats_.emplace(name, MatDecl{std::to_string(a.src().dim), std::to_string(a.tgt().dim), a});
}

void Document::add_one(const std::string& name, const OneMor& f) {
  claim(name);
  ones_.emplace(name, OneDecl{std::to_string(f.src()), std::to_string(f.tgt()), f});
}

void Document::add_two(const std::string& name, const std::string& src, const std::string& tgt,
                       const TwoMor& t) {
  const auto s = ones_.find(src), g = ones_.find(tgt);
  if (s == ones_.end() || g == ones_.end()) throw ShapeError("2-morphism '" + name + "' refers to undeclared 1-morphisms");
  if (s->second.value != t.src() || g->second.value != t.tgt())
    throw ShapeError("2-morphism '" + name + "' does not match its declared source and target");
  claim(name);
  twos_.emplace(name, TwoDecl{src, tgt, t});
}

void Document::add_two(const std::string& name, const TwoMor& t) {
  auto ensure = [&](const OneMor& f, const std::string& fallback) {
    for (const auto& [n, d] : ones_)
      if (d.value == f) return n;
    add_one(fallback, f);
    return fallback;
  };
  const std::string s = ensure(t.src(), name + "_src");
  const std::string g = ensure(t.tgt(), name + "_tgt");
  add_two(name, s, g, t);
}

void Document::add_let(const std::string& name, std::string_view expr) {
  claim(name);
  lets_.push_back(LetDecl{name, parse_expr(expr), 0});
}

// -- parse ---------------------------------------------------------------------

Document parse(std::string_view text) {
  const std::vector<RawDecl> decls = Parser(Lexer(text).run()).document();
  Document doc;
  std::set<std::string> seen;
  for (const RawDecl& d : decls)
    if (!seen.insert(d.name).second) throw ParseError("duplicate name '" + d.name + "'", d.line, d.column);

  for (const RawDecl& d : decls)
    if (d.kind == RawDecl::Kind::obj) doc.objects_.emplace(d.name, d.nat);

  auto object = [&](const RawRef& r) -> std::size_t {
    if (r.is_nat) return std::stoul(r.text);
    const auto it = doc.objects_.find(r.text);
    if (it == doc.objects_.end()) throw ParseError("unknown object '" + r.text + "'", r.line, r.column);
    return it->second;
  };

  auto build_matrix = [](const RawMatrix& raw, std::size_t rows, std::size_t cols) {
    if (raw.rows.empty()) {
      if (rows * cols != 0)
        throw ShapeError(loc(raw.line, raw.column) + "empty matrix where a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix is required");
      return Matrix(rows, cols);
    }
    const std::size_t r = raw.rows.size(), c = raw.rows.front().size();
    if (r != rows || c != cols)
      throw ShapeError(loc(raw.line, raw.column) + "matrix is " + std::to_string(r) + "x" + std::to_string(c) +
                       ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    std::vector<Rational> data;
    data.reserve(r * c);
    for (const auto& row : raw.rows) data.insert(data.end(), row.begin(), row.end());
    return Matrix(r, c, std::move(data));
  };

  auto check_grid = [](const RawDecl& d, std::size_t rows, std::size_t cols, std::size_t have_rows,
                       std::size_t have_cols) {
    if (d.empty_grid) {
      if (rows * cols != 0)
        throw ParseError("empty grid for a " + std::to_string(rows) + "x" + std::to_string(cols) + " grid",
                         d.grid_line, d.grid_column);
      return;
    }
    if (have_rows != rows || have_cols != cols)
      throw ParseError("grid is " + std::to_string(have_rows) + "x" + std::to_string(have_cols) + ", expected " +
                           std::to_string(rows) + "x" + std::to_string(cols) + " (target x source)",
                       d.grid_line, d.grid_column);
  };

  for (const RawDecl& d : decls) {
    if (d.kind == RawDecl::Kind::mat) {
      const std::size_t s = object(d.src), t = object(d.tgt);
      doc.mats_.emplace(d.name, MatDecl{d.src.text, d.tgt.text,
                                        matcat::MatMor({s}, {t}, build_matrix(d.matrix, t, s))});
    } else if (d.kind == RawDecl::Kind::one) {
      const std::size_t s = object(d.src), t = object(d.tgt);
      check_grid(d, t, s, d.decomp_rows.size(), d.decomp_rows.empty() ? 0 : d.decomp_rows.front().size());
      std::vector<Decomp> entries;
      for (const auto& row : d.decomp_rows) entries.insert(entries.end(), row.begin(), row.end());
      doc.ones_.emplace(d.name, OneDecl{d.src.text, d.tgt.text, OneMor(s, t, std::move(entries))});
    }
  }

  for (const RawDecl& d : decls) {
    if (d.kind != RawDecl::Kind::two) continue;
    auto one = [&](const RawRef& r) -> const OneMor& {
      const auto it = doc.ones_.find(r.text);
      if (r.is_nat || it == doc.ones_.end())
        throw ParseError("unknown 1-morphism '" + r.text + "'", r.line, r.column);
      return it->second.value;
    };
    const OneMor& f = one(d.src);
    const OneMor& g = one(d.tgt);
    if (f.src() != g.src() || f.tgt() != g.tgt())
      throw ShapeError(loc(d.line, d.column) + "'" + d.src.text + "' and '" + d.tgt.text + "' are not parallel");
    check_grid(d, f.tgt(), f.src(), d.matrix_rows.size(), d.matrix_rows.empty() ? 0 : d.matrix_rows.front().size());
    std::vector<Matrix> entries;
    for (std::size_t k = 0; k < d.matrix_rows.size(); ++k)
      for (std::size_t j = 0; j < d.matrix_rows[k].size(); ++j)
        entries.push_back(build_matrix(d.matrix_rows[k][j], g.at(k, j).total(), f.at(k, j).total()));
    doc.twos_.emplace(d.name, TwoDecl{d.src.text, d.tgt.text, TwoMor(f, g, std::move(entries))});
  }

  for (const RawDecl& d : decls)
    if (d.kind == RawDecl::Kind::let) doc.lets_.push_back(LetDecl{d.name, d.expr, d.line});
  return doc;
}

// -- serialize -------------------------------------------------------------------

std::string serialize(const Document& doc) {
  std::ostringstream out;
  for (const auto& [n, v] : doc.objects()) out << "obj " << n << " = " << v << '\n';
  for (const auto& [n, d] : doc.mats())
    out << "mat " << n << " : " << d.src << " -> " << d.tgt << " = " << to_string(d.value.mat()) << '\n';
  for (const auto& [n, d] : doc.ones())
    out << "one " << n << " : " << d.src << " -> " << d.tgt << " = " << to_string(d.value) << '\n';
  for (const auto& [n, d] : doc.twos())
    out << "two " << n << " : " << d.src << " => " << d.tgt << " = " << to_string(d.value) << '\n';
  for (const LetDecl& l : doc.lets()) out << "let " << l.name << " = " << format(*l.expr) << '\n';
  return out.str();
}

std::string kind_name(const Value& v) {
  switch (v.index()) {
    case 0:
      return "an object";
    case 1:
      return "a matrix";
    case 2:
      return "a 1-morphism";
    default:
      return "a 2-morphism";
  }
}

Value evaluate(const Document& doc, std::string_view expr) {
  const ExprPtr e = parse_expr(expr);
  Evaluator ev(doc);
  try {
    return ev.eval(*e);
  } catch (const Evaluator::located& err) {
    throw ShapeError(err.what());
  }
}

std::string format_expr(std::string_view expr) { return format(*parse_expr(expr)); }

Document result_document(const std::string& name, const Value& v) {
  Document doc;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::size_t>)
          doc.add_object(name, x);
        else if constexpr (std::is_same_v<T, matcat::MatMor>)
          doc.add_mat(name, x);
        else if constexpr (std::is_same_v<T, OneMor>)
          doc.add_one(name, x);
        else
          doc.add_two(name, x);
      },
      v);
  return doc;
}

}  // namespace twocat::morfile
