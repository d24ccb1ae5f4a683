#include "rotunda/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "rotunda/errors.hpp"
#include "rotunda/intmat.hpp"

namespace rotunda {

namespace {

Budget g_budget;  // process-wide default, set once by the CLI

}  // namespace

const Budget& Budget::current() { return g_budget; }
void Budget::set_current(const Budget& b) { g_budget = b; }

bool GroebnerBasis::contains_one() const {
  return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

ExpVec GroebnerBasis::leading_exponent(const RatPoly& p) const {
  const auto& ts = p.terms();
  auto best = ts.begin();
  for (auto it = ts.begin(); it != ts.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return best->first;
}

namespace {

// Internal representation during Buchberger: terms sorted descending.
struct STerm {
  ExpVec e;
  Rat c;
};

struct SPoly {
  std::vector<STerm> terms;  // descending in the active order

  bool zero() const { return terms.empty(); }
  const ExpVec& lead_exp() const { return terms.front().e; }
  const Rat& lead_coeff() const { return terms.front().c; }
  long degree() const {
    long d = 0;
    for (const auto& t : terms) d = std::max(d, total_degree(t.e));
    return d;
  }
};

SPoly to_sorted(const RatPoly& p, const MonomialOrder& ord) {
  SPoly s;
  for (const auto& [e, c] : p.terms()) s.terms.push_back({e, c});
  std::sort(s.terms.begin(), s.terms.end(),
            [&](const STerm& a, const STerm& b) { return ord.compare(a.e, b.e) > 0; });
  return s;
}

RatPoly from_sorted(const SPoly& s, const VarCtxPtr& ctx) {
  RatPoly p(ctx);
  for (const auto& t : s.terms) p.add_term(t.e, t.c);
  return p;
}

bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// p -= c * m * q  (m a monomial given by exponent offset)
void submul(SPoly& p, const Rat& c, const ExpVec& m, const SPoly& q, const MonomialOrder& ord) {
  std::vector<STerm> merged;
  merged.reserve(p.terms.size() + q.terms.size());
  std::size_t i = 0, j = 0;
  while (i < p.terms.size() || j < q.terms.size()) {
    if (j == q.terms.size()) {
      merged.push_back(p.terms[i++]);
      continue;
    }
    ExpVec qe(q.terms[j].e.size());
    for (std::size_t k = 0; k < qe.size(); ++k) qe[k] = q.terms[j].e[k] + m[k];
    if (i == p.terms.size()) {
      merged.push_back({qe, -c * q.terms[j].c});
      ++j;
      continue;
    }
    int cmp = ord.compare(p.terms[i].e, qe);
    if (cmp > 0) {
      merged.push_back(p.terms[i++]);
    } else if (cmp < 0) {
      merged.push_back({qe, -c * q.terms[j].c});
      ++j;
    } else {
      Rat nc = p.terms[i].c - c * q.terms[j].c;
      if (nc != 0) merged.push_back({p.terms[i].e, nc});
      ++i;
      ++j;
    }
  }
  p.terms = std::move(merged);
}

void make_primitive(SPoly& p) {
  if (p.terms.empty()) return;
  Int den = 1;
  for (const auto& t : p.terms) den = lcm(den, t.c.get_den());
  Int num = 0;
  for (const auto& t : p.terms) num = gcd(num, Int(t.c.get_num() * (den / t.c.get_den())));
  Rat scale(den, num);
  scale.canonicalize();
  if (p.lead_coeff() * scale < 0) scale = -scale;
  for (auto& t : p.terms) t.c *= scale;
}

void make_monic(SPoly& p) {
  if (p.terms.empty()) return;
  Rat inv = 1 / p.lead_coeff();
  for (auto& t : p.terms) t.c *= inv;
}

// Full normal form of p against the family gs.
SPoly reduce_full(SPoly p, const std::vector<SPoly>& gs, const MonomialOrder& ord,
                  const Budget& budget, BudgetError::Stats& stats) {
  SPoly remainder;
  while (!p.zero()) {
    if (p.terms.size() > budget.max_terms || p.degree() > budget.max_degree) {
      stats.max_terms_seen = std::max(stats.max_terms_seen, p.terms.size());
      stats.max_degree_seen = std::max(stats.max_degree_seen, p.degree());
      throw BudgetError("polynomial budget exceeded during reduction", stats);
    }
    bool reduced = false;
    for (const SPoly& g : gs) {
      if (g.zero()) continue;
      if (divides(g.lead_exp(), p.lead_exp())) {
        Rat c = p.lead_coeff() / g.lead_coeff();
        submul(p, c, exp_sub(p.lead_exp(), g.lead_exp()), g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return remainder;
}

}  // namespace

GroebnerBasis compute_groebner(const VarCtxPtr& ctx, const std::vector<RatPoly>& gens,
                               const MonomialOrder& order, const Budget& budget) {
  BudgetError::Stats stats;
  std::vector<SPoly> basis;
  for (const RatPoly& g : gens) {
    if (g.is_zero()) continue;
    SPoly s = to_sorted(g, order);
    make_primitive(s);
    basis.push_back(std::move(s));
  }

  struct Pair {
    std::size_t i, j;
    ExpVec lcm;
    long deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExpVec l = exp_lcm(basis[i].lead_exp(), basis[j].lead_exp());
      pairs.push_back({i, j, l, total_degree(l)});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  std::set<std::pair<std::size_t, std::size_t>> done;
  while (!pairs.empty()) {
    // Normal selection: smallest lcm degree, ties broken by index.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].deg < pairs[best].deg ||
          (pairs[k].deg == pairs[best].deg &&
           std::tie(pairs[k].i, pairs[k].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = k;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);
    done.insert({pr.i, pr.j});
    ++stats.pairs_processed;

    const SPoly& f = basis[pr.i];
    const SPoly& g = basis[pr.j];
    if (exp_coprime(f.lead_exp(), g.lead_exp())) continue;  // Buchberger 1st criterion
    // Chain criterion: some k with LT(k) | lcm(i,j) and both pairs done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || basis[k].zero()) continue;
      if (!divides(basis[k].lead_exp(), pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    SPoly s;
    {
      // S-polynomial
      ExpVec mf = exp_sub(pr.lcm, f.lead_exp());
      ExpVec mg = exp_sub(pr.lcm, g.lead_exp());
      SPoly left;
      left.terms.reserve(f.terms.size());
      for (const auto& t : f.terms) {
        ExpVec e(t.e.size());
        for (std::size_t x = 0; x < e.size(); ++x) e[x] = t.e[x] + mf[x];
        left.terms.push_back({e, t.c / f.lead_coeff()});
      }
      submul(left, 1 / g.lead_coeff(), mg, g, order);
      s = std::move(left);
    }
    SPoly r = reduce_full(std::move(s), basis, order, budget, stats);
    if (!r.zero()) {
      make_primitive(r);
      basis.push_back(std::move(r));
      stats.basis_size = basis.size();
      if (basis.size() > budget.max_basis)
        throw BudgetError("basis size budget exceeded", stats);
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<bool> drop(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || drop[i] || drop[j]) continue;
      if (divides(basis[j].lead_exp(), basis[i].lead_exp())) {
        if (basis[j].lead_exp() == basis[i].lead_exp() && j > i) continue;
        drop[i] = true;
      }
    }
  std::vector<SPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) minimal.push_back(std::move(basis[i]));

  // Interreduce tails and make monic.
  std::vector<SPoly> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = reduce_full(minimal[i], others, order, budget, stats);
    make_monic(reduced[i]);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const SPoly& a, const SPoly& b) {
    return order.compare(a.lead_exp(), b.lead_exp()) < 0;
  });

  GroebnerBasis out{ctx, order, {}};
  for (const SPoly& s : reduced) out.polys.push_back(from_sorted(s, ctx));
  return out;
}

RatPoly normal_form(const RatPoly& p, const GroebnerBasis& g) {
  BudgetError::Stats stats;
  std::vector<SPoly> basis;
  for (const RatPoly& q : g.polys) basis.push_back(to_sorted(q, g.order));
  SPoly s = to_sorted(p, g.order);
  SPoly r = reduce_full(std::move(s), basis, g.order, Budget::current(), stats);
  return from_sorted(r, p.context() ? p.context() : g.ctx);
}

struct IdealBasis::Cache {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> bases;
};

IdealBasis::IdealBasis(VarCtxPtr ctx, std::vector<RatPoly> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const RatPoly& g : gens_)
    if (g.context() && !g.context()->same_vars(*ctx_))
      throw InputError("IdealBasis: generator over a different context");
}

std::shared_ptr<const GroebnerBasis> IdealBasis::groebner(std::optional<MonomialOrder> order) const {
  MonomialOrder ord = order ? *order : MonomialOrder::grevlex(ctx_->size());
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord.tag());
    if (it != cache_->bases.end()) return it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(compute_groebner(ctx_, gens_, ord));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(ord.tag(), gb);
  return it->second;
}

bool IdealBasis::is_zero_ideal() const {
  for (const RatPoly& g : gens_)
    if (!g.is_zero()) return false;
  return true;
}

std::string IdealBasis::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ">";
  return os.str();
}

int ideal_dimension(const GroebnerBasis& g, const std::vector<std::size_t>& ignoring) {
  if (g.contains_one()) return kDimEmpty;
  std::size_t n = g.ctx->size();
  std::vector<bool> ignored(n, false);
  for (std::size_t i : ignoring) ignored[i] = true;

  // Leading-term supports as variable sets.
  std::vector<std::vector<std::size_t>> supports;
  for (const RatPoly& p : g.polys) {
    ExpVec le = g.leading_exponent(p);
    std::vector<std::size_t> sup;
    for (std::size_t i = 0; i < n; ++i)
      if (le[i] > 0) sup.push_back(i);
    supports.push_back(std::move(sup));
  }

  std::vector<bool> in_set(n, false);
  for (std::size_t i = 0; i < n; ++i) in_set[i] = ignored[i];

  auto independent = [&]() {
    for (const auto& sup : supports) {
      bool inside = true;
      for (std::size_t i : sup)
        if (!in_set[i]) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
    return true;
  };

  if (!independent()) return kDimEmpty;  // fibre empty over generic parameters

  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < n; ++i)
    if (!ignored[i]) free_vars.push_back(i);

  int best = 0;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t k, int count) {
    best = std::max(best, count);
    if (k == free_vars.size()) return;
    if (count + static_cast<int>(free_vars.size() - k) <= best) return;  // bound
    // Include free_vars[k] if the set stays independent.
    in_set[free_vars[k]] = true;
    if (independent()) dfs(k + 1, count + 1);
    in_set[free_vars[k]] = false;
    dfs(k + 1, count);
  };
  dfs(0, 0);
  return best;
}

IdealBasis eliminate(const IdealBasis& ideal, const std::vector<std::size_t>& drop,
                     const Budget& budget) {
  const VarCtxPtr& ctx = ideal.context();
  if (drop.empty()) return ideal;
  MonomialOrder ord = MonomialOrder::elimination(ctx->size(), drop);
  GroebnerBasis gb = compute_groebner(ctx, ideal.gens(), ord, budget);

  std::vector<bool> dropped(ctx->size(), false);
  for (std::size_t i : drop) dropped[i] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ctx->size(); ++i)
    if (!dropped[i]) keep.push_back(i);
  VarCtxPtr sub = ctx->restricted(keep);

  std::vector<RatPoly> gens;
  std::vector<bool> allowed(ctx->size(), false);
  for (std::size_t i : keep) allowed[i] = true;
  for (const RatPoly& p : gb.polys) {
    if (!p.supported_within(allowed)) continue;
    gens.push_back(p.lifted(sub));
  }
  return IdealBasis(sub, std::move(gens));
}

IdealBasis saturate(const IdealBasis& ideal, const RatPoly& f, const Budget& budget) {
  const VarCtxPtr& ctx = ideal.context();
  if (f.is_zero()) {
    // I : 0^inf is the unit ideal.
    return IdealBasis(ctx, {RatPoly::constant(ctx, 1)});
  }
  if (f.is_constant()) return ideal;
  std::string tname = "_t";
  while (ctx->index_of(tname)) tname += "_";
  VarCtxPtr ext = ctx->extended({tname}, {VarRole::Auxiliary});
  std::size_t t = ext->size() - 1;
  std::vector<RatPoly> gens;
  for (const RatPoly& g : ideal.gens()) gens.push_back(g.lifted(ext));
  gens.push_back(f.lifted(ext) * RatPoly::variable(ext, t) - RatPoly::constant(ext, 1));
  IdealBasis extended(ext, std::move(gens));
  IdealBasis result = eliminate(extended, {t}, budget);
  // Re-anchor onto the original context object.
  std::vector<RatPoly> back;
  for (const RatPoly& g : result.gens()) back.push_back(g.lifted(ctx));
  return IdealBasis(ctx, std::move(back));
}

std::vector<RatVec> affine_linear_relations(const GroebnerBasis& g,
                                            const std::vector<RatPoly>& elems) {
  std::vector<RatPoly> nfs;
  for (const RatPoly& e : elems) nfs.push_back(normal_form(e, g));
  nfs.push_back(normal_form(RatPoly::constant(g.ctx, 1), g));

  std::set<ExpVec> monomials;
  for (const RatPoly& p : nfs)
    for (const auto& [e, c] : p.terms()) monomials.insert(e);
  std::vector<ExpVec> cols(monomials.begin(), monomials.end());

  std::vector<RatVec> rows;
  for (const RatPoly& p : nfs) {
    RatVec row(cols.size(), Rat(0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto it = p.terms().find(cols[j]);
      if (it != p.terms().end()) row[j] = it->second;
    }
    rows.push_back(std::move(row));
  }
  if (cols.empty()) {
    // Everything reduced to zero: all coefficient vectors are relations.
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RatVec rel(rows.size(), Rat(0));
      rel[i] = 1;
      basis.push_back(std::move(rel));
    }
    return basis;
  }
  return q_linear_relations(rows);
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
  auto ga = a.groebner();
  auto gb = b.groebner();
  for (const RatPoly& p : b.gens())
    if (!normal_form(p.lifted(a.context()), *ga).is_zero()) return false;
  for (const RatPoly& p : a.gens())
    if (!normal_form(p.lifted(b.context()), *gb).is_zero()) return false;
  return true;
}

FieldElem FieldElem::of(const RatPoly& p) {
  return FieldElem{p, RatPoly::constant(p.context(), 1)};
}

std::string FieldElem::to_string() const {
  if (den.is_constant() && !den.is_zero() && den.terms().begin()->second == 1)
    return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

int subfield_transcendence_degree(const VarCtxPtr& ctx, const std::vector<RatPoly>& relations,
                                  const std::vector<FieldElem>& elems, const Budget& budget) {
  if (elems.empty()) return 0;
  std::vector<std::string> tags;
  std::vector<VarRole> roles;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    tags.push_back("_w" + std::to_string(i + 1));
    roles.push_back(VarRole::Auxiliary);
  }
  VarCtxPtr ext = ctx->extended(tags, roles);

  std::vector<RatPoly> gens;
  for (const RatPoly& r : relations) gens.push_back(r.lifted(ext));
  RatPoly dens = RatPoly::constant(ext, 1);
  bool any_den = false;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    RatPoly w = RatPoly::variable(ext, ctx->size() + i);
    gens.push_back(elems[i].num.lifted(ext) - w * elems[i].den.lifted(ext));
    if (!(elems[i].den.is_constant())) {
      dens = dens * elems[i].den.lifted(ext);
      any_den = true;
    }
  }
  IdealBasis ib(ext, std::move(gens));
  if (any_den) ib = saturate(ib, dens, budget);

  std::vector<std::size_t> drop;
  for (std::size_t i = 0; i < ctx->size(); ++i) drop.push_back(i);
  IdealBasis image = eliminate(ib, drop, budget);
  int d = ideal_dimension(*image.groebner());
  if (d == kDimEmpty)
    throw PreconditionError("subfield_transcendence_degree: inconsistent relations (1 in ideal)");
  return d;
}

}  // namespace rotunda
