#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rotunda/numeric.hpp"

namespace rotunda {

enum class VarRole : std::uint8_t {
  Additive,        // G_a coordinate
  Multiplicative,  // G_m coordinate, required invertible downstream
  Auxiliary,       // internal helper (Rabinowitsch variables, image targets)
  Parameter,       // generic constant adjoined to the base field
};

/// Ordered, named variable set shared by the polynomials built over it.
/// Immutable after construction; pass around by shared_ptr.
class VarContext {
 public:
  VarContext() = default;
  VarContext(std::vector<std::string> names, std::vector<VarRole> roles);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> names,
                                                std::vector<VarRole> roles);
  /// Coordinates x1..xn (additive) followed by y1..yn (multiplicative).
  static std::shared_ptr<const VarContext> g_power(std::size_t n);
  /// Torus coordinates y1..yn.
  static std::shared_ptr<const VarContext> torus(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  VarRole role(std::size_t i) const { return roles_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<VarRole>& roles() const { return roles_; }

  /// Index of a name, or nullopt.
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::size_t> indices_with_role(VarRole role) const;

  /// New context with extra variables appended.
  std::shared_ptr<const VarContext> extended(const std::vector<std::string>& names,
                                             const std::vector<VarRole>& roles) const;
  /// New context keeping only the listed variables (in their current order).
  std::shared_ptr<const VarContext> restricted(const std::vector<std::size_t>& keep) const;

  bool same_vars(const VarContext& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

using VarCtxPtr = std::shared_ptr<const VarContext>;

/// Exponent vector; length always equals the context size.
using ExpVec = std::vector<std::uint32_t>;

long total_degree(const ExpVec& e);

/// Monomial order: graded reverse lexicographic, lexicographic, or a block
/// elimination order (the block variables are eliminated; both blocks are
/// compared by grevlex).
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { GrevLex, Lex, Elim };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder elimination(std::size_t nvars, std::vector<std::size_t> block);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<std::size_t>& block() const { return block_; }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const ExpVec& a, const ExpVec& b) const;

  std::string tag() const;
  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && nvars_ == o.nvars_ && block_ == o.block_;
  }

 private:
  Kind kind_ = Kind::GrevLex;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> block_;     // eliminated variables, sorted
  std::vector<bool> in_block_;
};

/// Sparse multivariate polynomial over Q. Terms are stored in a canonical
/// map keyed by exponent vector; no zero coefficients are kept.
class RatPoly {
 public:
  using TermMap = std::map<ExpVec, Rat>;

  RatPoly() = default;
  explicit RatPoly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {}

  static RatPoly zero(VarCtxPtr ctx) { return RatPoly(std::move(ctx)); }
  static RatPoly constant(VarCtxPtr ctx, const Rat& c);
  static RatPoly variable(VarCtxPtr ctx, std::size_t i, std::uint32_t power = 1);
  static RatPoly monomial(VarCtxPtr ctx, const ExpVec& e, const Rat& c);

  const VarCtxPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  long degree() const;

  void add_term(const ExpVec& e, const Rat& c);

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly scaled(const Rat& c) const;
  RatPoly pow(std::uint32_t k) const;

  bool operator==(const RatPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  /// Deterministic total order on polynomials over the same context.
  bool canonical_less(const RatPoly& o) const;

  /// True if no variable outside `allowed` occurs.
  bool supported_within(const std::vector<bool>& allowed) const;
  std::vector<bool> support() const;

  /// Scale so coefficients are coprime integers and the leading coefficient
  /// (w.r.t. the canonical term order) is positive. Zero stays zero.
  RatPoly primitive() const;

  /// Substitute each variable by the given polynomial (over any context).
  /// `images` must have one entry per variable of this context.
  RatPoly substituted(const VarCtxPtr& target, const std::vector<RatPoly>& images) const;

  /// Reinterpret over a context that contains the same variable names
  /// (possibly among others); exponents are re-indexed by name.
  RatPoly lifted(const VarCtxPtr& target) const;

  /// Partial derivative with respect to variable i.
  RatPoly derivative(std::size_t i) const;

  /// Evaluate at a rational point (one value per variable).
  Rat evaluate(const RatVec& point) const;

  std::string to_string() const;

 private:
  VarCtxPtr ctx_;
  TermMap terms_;
};

}  // namespace rotunda
