#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rotunda/poly.hpp"

namespace rotunda {

/// Degree/size budget for Gröbner runs. Exceeding any bound raises
/// BudgetError with the statistics gathered so far; answers are never
/// silently truncated.
struct Budget {
  long max_degree = 120;
  std::size_t max_terms = 100000;   // per polynomial
  std::size_t max_basis = 2000;

  static const Budget& current();
  static void set_current(const Budget& b);
};

/// Reduced Groebner basis together with the order that produced it.
struct GroebnerBasis {
  VarCtxPtr ctx;
  MonomialOrder order;
  std::vector<RatPoly> polys;  // monic, auto-reduced, sorted by leading term

  bool contains_one() const;
  ExpVec leading_exponent(const RatPoly& p) const;
};

/// Generating set of an ideal with a write-once cache of reduced Groebner
/// bases keyed by order tag. Value-semantic; copies share the cache.
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(VarCtxPtr ctx, std::vector<RatPoly> gens);

  const VarCtxPtr& context() const { return ctx_; }
  const std::vector<RatPoly>& gens() const { return gens_; }

  /// Reduced Groebner basis for the requested order (grevlex by default),
  /// computed on first use and cached. Concurrent population is idempotent.
  std::shared_ptr<const GroebnerBasis> groebner(
      std::optional<MonomialOrder> order = std::nullopt) const;

  bool is_zero_ideal() const;

  std::string to_string() const;

 private:
  struct Cache;
  VarCtxPtr ctx_;
  std::vector<RatPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Buchberger with the coprimality and chain criteria; returns the reduced
/// basis (monic, auto-reduced, deterministically sorted).
GroebnerBasis compute_groebner(const VarCtxPtr& ctx, const std::vector<RatPoly>& gens,
                               const MonomialOrder& order, const Budget& budget = Budget::current());

/// Remainder of multivariate division by a reduced basis: zero iff the
/// polynomial lies in the ideal.
RatPoly normal_form(const RatPoly& p, const GroebnerBasis& g);

constexpr int kDimEmpty = -1;

/// Krull dimension of the quotient ring via maximal sets of variables
/// independent modulo the leading-term ideal. Returns kDimEmpty when 1 is in
/// the ideal. Variables in `ignoring` are treated as generic parameters:
/// independent sets are counted among the remaining variables, on top of the
/// parameters (assumes the parameters are independent, which holds for the
/// fresh symbols this code adjoins).
int ideal_dimension(const GroebnerBasis& g, const std::vector<std::size_t>& ignoring = {});

/// Generators of the ideal's contraction to the subring without `drop`.
IdealBasis eliminate(const IdealBasis& ideal, const std::vector<std::size_t>& drop,
                     const Budget& budget = Budget::current());

/// Saturation I : f^inf via a fresh inverse variable.
IdealBasis saturate(const IdealBasis& ideal, const RatPoly& f,
                    const Budget& budget = Budget::current());

/// Basis of {(c_1..c_k, c_0) : sum c_i elem_i + c_0 lies in the ideal},
/// canonicalized to primitive integer vectors.
std::vector<RatVec> affine_linear_relations(const GroebnerBasis& g,
                                            const std::vector<RatPoly>& elems);

/// True iff the two ideals over the same context are equal (mutual
/// normal-form membership of the generators).
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Transcendence degree over Q of the subfield generated by elements given
/// as numerator/denominator pairs over `ctx` modulo `relations`: adjoins tag
/// variables, eliminates the originals, and measures the image's dimension.
struct FieldElem {
  RatPoly num;
  RatPoly den;  // must be nonzero modulo the relations

  static FieldElem of(const RatPoly& p);
  std::string to_string() const;
};

int subfield_transcendence_degree(const VarCtxPtr& ctx, const std::vector<RatPoly>& relations,
                                  const std::vector<FieldElem>& elems,
                                  const Budget& budget = Budget::current());

}  // namespace rotunda
