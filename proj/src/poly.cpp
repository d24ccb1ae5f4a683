#include "rotunda/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rotunda/errors.hpp"

namespace rotunda {

VarContext::VarContext(std::vector<std::string> names, std::vector<VarRole> roles)
    : names_(std::move(names)), roles_(std::move(roles)) {
  if (names_.size() != roles_.size()) throw InputError("VarContext: names/roles mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("VarContext: duplicate name " + names_[i]);
}

VarCtxPtr VarContext::make(std::vector<std::string> names, std::vector<VarRole> roles) {
  return std::make_shared<const VarContext>(std::move(names), std::move(roles));
}

VarCtxPtr VarContext::g_power(std::size_t n) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("x" + std::to_string(i));
    roles.push_back(VarRole::Additive);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("y" + std::to_string(i));
    roles.push_back(VarRole::Multiplicative);
  }
  return make(std::move(names), std::move(roles));
}

VarCtxPtr VarContext::torus(std::size_t n) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("y" + std::to_string(i));
    roles.push_back(VarRole::Multiplicative);
  }
  return make(std::move(names), std::move(roles));
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VarContext::indices_with_role(VarRole role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles_.size(); ++i)
    if (roles_[i] == role) out.push_back(i);
  return out;
}

VarCtxPtr VarContext::extended(const std::vector<std::string>& names,
                               const std::vector<VarRole>& roles) const {
  std::vector<std::string> n = names_;
  std::vector<VarRole> r = roles_;
  n.insert(n.end(), names.begin(), names.end());
  r.insert(r.end(), roles.begin(), roles.end());
  return make(std::move(n), std::move(r));
}

VarCtxPtr VarContext::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> n;
  std::vector<VarRole> r;
  for (std::size_t i : keep) {
    n.push_back(names_[i]);
    r.push_back(roles_[i]);
  }
  return make(std::move(n), std::move(r));
}

long total_degree(const ExpVec& e) {
  long d = 0;
  for (std::uint32_t x : e) d += x;
  return d;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::GrevLex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = nvars;
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::vector<std::size_t> block) {
  MonomialOrder o;
  o.kind_ = Kind::Elim;
  o.nvars_ = nvars;
  std::sort(block.begin(), block.end());
  o.block_ = std::move(block);
  o.in_block_.assign(nvars, false);
  for (std::size_t i : o.block_) o.in_block_[i] = true;
  return o;
}

namespace {

// grevlex on a subsequence of the variables: higher total degree first;
// on ties the last differing variable with *smaller* exponent wins.
int grevlex_cmp(const ExpVec& a, const ExpVec& b, const std::vector<std::size_t>& vars) {
  long da = 0, db = 0;
  for (std::size_t i : vars) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
  switch (kind_) {
    case Kind::Lex: {
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    }
    case Kind::GrevLex: {
      long da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = nvars_; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case Kind::Elim: {
      std::vector<std::size_t> rest;
      rest.reserve(nvars_ - block_.size());
      for (std::size_t i = 0; i < nvars_; ++i)
        if (!in_block_[i]) rest.push_back(i);
      int c = grevlex_cmp(a, b, block_);
      if (c != 0) return c;
      return grevlex_cmp(a, b, rest);
    }
  }
  return 0;
}

std::string MonomialOrder::tag() const {
  switch (kind_) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elim: {
      std::string t = "elim";
      for (std::size_t i : block_) t += "_" + std::to_string(i);
      return t;
    }
  }
  return "?";
}

RatPoly RatPoly::constant(VarCtxPtr ctx, const Rat& c) {
  RatPoly p(std::move(ctx));
  if (c != 0) p.terms_[ExpVec(p.ctx_->size(), 0)] = c;
  return p;
}

RatPoly RatPoly::variable(VarCtxPtr ctx, std::size_t i, std::uint32_t power) {
  RatPoly p(std::move(ctx));
  if (i >= p.ctx_->size()) throw InputError("RatPoly::variable: index out of range");
  ExpVec e(p.ctx_->size(), 0);
  e[i] = power;
  if (power == 0)
    p.terms_[ExpVec(p.ctx_->size(), 0)] = 1;
  else
    p.terms_[e] = 1;
  return p;
}

RatPoly RatPoly::monomial(VarCtxPtr ctx, const ExpVec& e, const Rat& c) {
  RatPoly p(std::move(ctx));
  if (e.size() != p.ctx_->size()) throw InputError("RatPoly::monomial: bad exponent length");
  if (c != 0) p.terms_[e] = c;
  return p;
}

bool RatPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

long RatPoly::degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void RatPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  RatPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  RatPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

RatPoly RatPoly::operator-() const {
  RatPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  RatPoly r(ctx_ ? ctx_ : o.ctx_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

RatPoly RatPoly::scaled(const Rat& c) const {
  RatPoly r(ctx_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

RatPoly RatPoly::pow(std::uint32_t k) const {
  RatPoly r = RatPoly::constant(ctx_, 1);
  RatPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

bool RatPoly::canonical_less(const RatPoly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != o.terms_.end();
}

bool RatPoly::supported_within(const std::vector<bool>& allowed) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && !allowed[i]) return false;
  return true;
}

std::vector<bool> RatPoly::support() const {
  std::vector<bool> s(ctx_ ? ctx_->size() : 0, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) s[i] = true;
  return s;
}

RatPoly RatPoly::primitive() const {
  if (terms_.empty()) return *this;
  Int den = 1;
  for (const auto& [e, c] : terms_) den = lcm(den, c.get_den());
  Int num = 0;
  for (const auto& [e, c] : terms_) num = gcd(num, Int(c.get_num() * (den / c.get_den())));
  Rat scale(den, num);
  scale.canonicalize();
  RatPoly r = scaled(scale);
  // Positive leading coefficient w.r.t. the canonical map order (last term).
  if (!r.terms_.empty() && r.terms_.rbegin()->second < 0) r = -r;
  return r;
}

RatPoly RatPoly::substituted(const VarCtxPtr& target, const std::vector<RatPoly>& images) const {
  if (images.size() != ctx_->size()) throw InputError("substituted: wrong image count");
  RatPoly out = RatPoly::zero(target);
  for (const auto& [e, c] : terms_) {
    RatPoly term = RatPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out = out + term;
  }
  return out;
}

RatPoly RatPoly::lifted(const VarCtxPtr& target) const {
  std::vector<std::size_t> map(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    auto idx = target->index_of(ctx_->name(i));
    if (!idx) throw InputError("lifted: variable " + ctx_->name(i) + " missing from target");
    map[i] = *idx;
  }
  RatPoly out(target);
  for (const auto& [e, c] : terms_) {
    ExpVec e2(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e2[map[i]] = e[i];
    out.add_term(e2, c);
  }
  return out;
}

RatPoly RatPoly::derivative(std::size_t i) const {
  RatPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec e2 = e;
    e2[i] -= 1;
    out.add_term(e2, c * Rat(static_cast<long>(e[i])));
  }
  return out;
}

Rat RatPoly::evaluate(const RatVec& point) const {
  if (point.size() != ctx_->size()) throw InputError("evaluate: wrong point length");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Print in descending grevlex order for readability.
  std::vector<const TermMap::value_type*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  MonomialOrder ord = MonomialOrder::grevlex(ctx_->size());
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return ord.compare(a->first, b->first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const Rat& c = t->second;
    Rat a = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(t->first) > 0;
    if (!has_vars || a != 1) {
      os << rotunda::to_string(a);
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ctx_->name(i);
      if (t->first[i] > 1) os << "^" << t->first[i];
    }
  }
  return os.str();
}

}  // namespace rotunda
