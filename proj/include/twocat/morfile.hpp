#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twocat/matcat.hpp"
#include "twocat/twovect.hpp"

// Text format for objects and morphisms.
//
//   # comment
//   obj A = 3
//   mat a : 3 -> 2 = {1 0 2; 0 1/2 1}
//   one f : A -> 2 = [[2,1] [] [1]; [3] [0] []]
//   two t : f => g = [{1 0; 0 1} {} {1/2}; ...]
//   let h = g .h f
//
// Object positions accept a natural or an obj name. Expressions combine
// names with, from tightest binding to loosest:
//   .h  or ∘    horizontal composition; a 1-morphism next to a 2-morphism
//               is promoted to its identity, giving a whiskering
//   .h2 or ∘₂   horizontal composition of 2-morphisms
//   (+) or ⊕    direct sum
//   .v  or ⊙    vertical composition, right operand first
//   +           sum of parallel 2-morphisms or matrices
// All binary operators associate to the left. Output always uses the ASCII
// spellings. Builders (pi, nu, theta also spelled π, ν, θ):
//   id(n) id(f) zero(n, m) zero(f, g) p(n, m, 1|2) i(n, m, 1|2)
//   pi(f, g, 1|2) nu(f, g, 1|2) theta(n, m, A|B|AB|BA|P)
//   norm(x) inv(t) assoc(r, f, e) dist(f, g, h) distr(g, h, e)
namespace twocat::morfile {

struct MatDecl {
  std::string src;
  std::string tgt;
  matcat::MatMor value;
};

struct OneDecl {
  std::string src;
  std::string tgt;
  OneMor value;
};

struct TwoDecl {
  std::string src;  ///< name of a declared 1-morphism
  std::string tgt;
  TwoMor value;
};

struct Expr;

struct LetDecl {
  std::string name;
  std::shared_ptr<const Expr> expr;
  std::size_t line = 0;
};

class Document {
 public:
  void add_object(const std::string& name, std::size_t n);
  void add_mat(const std::string& name, const matcat::MatMor& a);
  void add_one(const std::string& name, const OneMor& f);
  /// src and tgt must already be declared 1-morphisms matching t.
  void add_two(const std::string& name, const std::string& src, const std::string& tgt, const TwoMor& t);
  /// Declares src and tgt as `name_src`, `name_tgt` unless an equal 1-morphism
  /// is already declared under some name.
  void add_two(const std::string& name, const TwoMor& t);
  /// Throws ParseError on a malformed expression.
  void add_let(const std::string& name, std::string_view expr);

  const std::map<std::string, std::size_t>& objects() const { return objects_; }
  const std::map<std::string, MatDecl>& mats() const { return mats_; }
  const std::map<std::string, OneDecl>& ones() const { return ones_; }
  const std::map<std::string, TwoDecl>& twos() const { return twos_; }
  const std::vector<LetDecl>& lets() const { return lets_; }

  bool has(const std::string& name) const;

 private:
  friend Document parse(std::string_view text);
  void claim(const std::string& name, std::size_t line = 0);

  std::map<std::string, std::size_t> objects_;
  std::map<std::string, MatDecl> mats_;
  std::map<std::string, OneDecl> ones_;
  std::map<std::string, TwoDecl> twos_;
  std::vector<LetDecl> lets_;
};

/// Throws ParseError for syntax errors, grids of the wrong size and unresolved references,
/// ShapeError (message prefixed with line:column) for ill-typed declarations.
Document parse(std::string_view text);

/// Canonical text: obj, mat, one and two declarations each sorted by name,
/// then lets in declaration order.
std::string serialize(const Document& doc);

using Value = std::variant<std::size_t, matcat::MatMor, OneMor, TwoMor>;

std::string kind_name(const Value& v);

/// Evaluates an expression over the names of `doc`. Throws ParseError on bad
/// syntax and ShapeError (prefixed with line:column) on type errors.
Value evaluate(const Document& doc, std::string_view expr);

/// Canonical ASCII rendering of an expression.
std::string format_expr(std::string_view expr);

/// Single-result document: `name` bound to v, with the source and target
/// 1-morphisms of a 2-morphism declared as name_src and name_tgt.
Document result_document(const std::string& name, const Value& v);

}  // namespace twocat::morfile
