#pragma once

// Sparse graded multivariate polynomials over an exact coefficient ring,
// plus quotient rings with degreewise normal forms.
//
// Grading is by weighted (cohomological) degree: each variable carries a
// positive degree and deg(m) = sum of exponent * variable degree. There is
// no formal series variable; the coefficient of t^k in a total class is by
// convention the homogeneous degree-k part.
//
// Monomial order: compare weighted degree, ties broken lexicographically
// with the *last* ring variable most significant (variable list c1 < c2 <
// ... < h). Quotient bases and canonical text forms are deterministic
// consequences of this order.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cupkernel/coeff.hpp"

namespace cupkernel {

inline constexpr unsigned kNoTruncation = std::numeric_limits<unsigned>::max();

struct GradedVariable {
  std::string name;
  unsigned degree = 1;
};

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<uint32_t> exps, unsigned degree)
      : exps_(std::move(exps)), degree_(degree) {}

  const std::vector<uint32_t>& exponents() const { return exps_; }
  uint32_t exponent(unsigned i) const { return i < exps_.size() ? exps_[i] : 0; }
  unsigned degree() const { return degree_; }
  bool is_constant() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const {
    std::vector<uint32_t> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) e[i] = exponent(static_cast<unsigned>(i)) + o.exponent(static_cast<unsigned>(i));
    return Monomial(std::move(e), degree_ + o.degree_);
  }

  // <0, 0, >0 as in strcmp; graded, ties by lex from the last variable down.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (size_t i = n; i-- > 0;) {
      uint32_t ea = a.exponent(static_cast<unsigned>(i));
      uint32_t eb = b.exponent(static_cast<unsigned>(i));
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const Monomial& o) const { return compare(*this, o) == 0; }

 private:
  std::vector<uint32_t> exps_;
  unsigned degree_ = 0;
};

struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ambient variable list of a polynomial ring. Immutable; polynomials hold a
/// shared pointer to it.
class PolyRing {
 public:
  static PolyRingPtr make(std::vector<GradedVariable> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
  }

  explicit PolyRing(std::vector<GradedVariable> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
      if (v.degree < 1) throw std::invalid_argument("PolyRing: variable degree must be >= 1");
      if (v.name.empty()) throw std::invalid_argument("PolyRing: empty variable name");
      for (const auto& w : vars_)
        if (&v != &w && v.name == w.name)
          throw std::invalid_argument("PolyRing: duplicate variable name " + v.name);
    }
  }

  unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }
  const GradedVariable& var(unsigned i) const { return vars_.at(i); }
  const std::vector<GradedVariable>& variables() const { return vars_; }

  std::optional<unsigned> index_of(std::string_view name) const {
    for (unsigned i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  bool same_variables(const PolyRing& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree) return false;
    return true;
  }

  unsigned weighted_degree(const std::vector<uint32_t>& exps) const {
    unsigned d = 0;
    for (size_t i = 0; i < exps.size(); ++i) d += exps[i] * vars_[i].degree;
    return d;
  }

  Monomial monomial(std::vector<uint32_t> exps) const {
    if (exps.size() != vars_.size()) throw std::invalid_argument("PolyRing: exponent vector size mismatch");
    unsigned d = weighted_degree(exps);
    return Monomial(std::move(exps), d);
  }

  Monomial unit_monomial() const { return Monomial(std::vector<uint32_t>(vars_.size(), 0), 0); }

  /// All monomials of weighted degree exactly d, in descending monomial order.
  std::vector<Monomial> monomials_of_degree(unsigned d) const {
    std::vector<Monomial> out;
    std::vector<uint32_t> exps(vars_.size(), 0);
    enumerate(d, 0, exps, out);
    std::sort(out.begin(), out.end(), MonoGreater{});
    return out;
  }

  PolyRingPtr extended(GradedVariable extra) const {
    auto vars = vars_;
    vars.push_back(std::move(extra));
    return make(std::move(vars));
  }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (unsigned i = 0; i < nvars(); ++i) {
      uint32_t e = m.exponent(i);
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += vars_[i].name;
      if (e > 1) {
        s += '^';
        s += std::to_string(e);
      }
    }
    return s.empty() ? "1" : s;
  }

 private:
  void enumerate(unsigned remaining, unsigned from, std::vector<uint32_t>& exps,
                 std::vector<Monomial>& out) const {
    if (remaining == 0) {
      out.emplace_back(exps, weighted_degree(exps));
      return;
    }
    if (from >= vars_.size()) return;
    unsigned deg = vars_[from].degree;
    for (uint32_t e = 0; e * deg <= remaining; ++e) {
      exps[from] = e;
      enumerate(remaining - e * deg, from + 1, exps, out);
    }
    exps[from] = 0;
  }

  std::vector<GradedVariable> vars_;
};

inline bool rings_compatible(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && a->same_variables(*b));
}

template <CoefficientRing C>
class GradedPolynomial {
 public:
  using Terms = std::map<Monomial, C, MonoGreater>;

  explicit GradedPolynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("GradedPolynomial: null ring");
  }

  static GradedPolynomial zero(PolyRingPtr ring) { return GradedPolynomial(std::move(ring)); }

  static GradedPolynomial constant(PolyRingPtr ring, const C& c) {
    GradedPolynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(p.ring_->unit_monomial(), c);
    return p;
  }

  static GradedPolynomial one(PolyRingPtr ring) { return constant(std::move(ring), C::one()); }

  static GradedPolynomial variable(PolyRingPtr ring, unsigned index, uint32_t power = 1) {
    GradedPolynomial p(std::move(ring));
    std::vector<uint32_t> e(p.ring_->nvars(), 0);
    e.at(index) = power;
    p.terms_.emplace(p.ring_->monomial(std::move(e)), C::one());
    return p;
  }

  static GradedPolynomial variable(PolyRingPtr ring, std::string_view name, uint32_t power = 1) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument(std::string("unknown variable ") + std::string(name));
    return variable(std::move(ring), *idx, power);
  }

  static GradedPolynomial term(PolyRingPtr ring, Monomial m, const C& c) {
    GradedPolynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const PolyRingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_constant() && terms_.begin()->second.is_one();
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C::zero() : it->second;
  }

  C constant_term() const { return coefficient(ring_->unit_monomial()); }

  unsigned max_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  unsigned min_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  void add_term(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GradedPolynomial operator+(const GradedPolynomial& o) const {
    check_ring(o);
    GradedPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  GradedPolynomial operator-(const GradedPolynomial& o) const {
    check_ring(o);
    GradedPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  GradedPolynomial operator-() const {
    GradedPolynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  GradedPolynomial scaled(const C& c) const {
    GradedPolynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
  }

  /// Product with all parts of degree > truncation discarded.
  GradedPolynomial times(const GradedPolynomial& o, unsigned truncation = kNoTruncation) const {
    check_ring(o);
    GradedPolynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
      if (ma.degree() > truncation) continue;
      for (const auto& [mb, cb] : o.terms_) {
        if (truncation != kNoTruncation && ma.degree() + mb.degree() > truncation) continue;
        r.add_term(ma.times(mb), ca * cb);
      }
    }
    return r;
  }

  GradedPolynomial operator*(const GradedPolynomial& o) const { return times(o); }

  GradedPolynomial pow(unsigned k, unsigned truncation = kNoTruncation) const {
    GradedPolynomial r = one(ring_);
    for (unsigned i = 0; i < k; ++i) r = r.times(*this, truncation);
    return r;
  }

  GradedPolynomial graded_part(unsigned d) const {
    GradedPolynomial r(ring_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  GradedPolynomial truncated(unsigned maxdeg) const {
    GradedPolynomial r(ring_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= maxdeg) r.terms_.emplace(m, c);
    return r;
  }

  /// Multiplicative inverse up to the given degree, by graded recursion.
  /// Requires constant term equal to the ring unit.
  GradedPolynomial inverse_graded(unsigned truncation) const {
    if (!constant_term().is_one())
      throw std::domain_error("inverse_graded: constant term is not the unit");
    std::vector<GradedPolynomial> u(truncation + 1, zero(ring_));
    for (const auto& [m, c] : terms_)
      if (m.degree() <= truncation) u[m.degree()].terms_.emplace(m, c);
    std::vector<GradedPolynomial> v(truncation + 1, zero(ring_));
    v[0] = one(ring_);
    for (unsigned d = 1; d <= truncation; ++d) {
      GradedPolynomial acc(ring_);
      for (unsigned k = 1; k <= d; ++k) acc = acc + u[k].times(v[d - k]);
      v[d] = -acc;
    }
    GradedPolynomial r(ring_);
    for (auto& part : v)
      for (const auto& [m, c] : part.terms_) r.terms_.emplace(m, c);
    return r;
  }

  /// Composition: replace variable i by images[i] (all in one target ring).
  GradedPolynomial substituted(const std::vector<GradedPolynomial>& images,
                               unsigned truncation = kNoTruncation) const {
    if (images.size() != ring_->nvars())
      throw std::invalid_argument("substituted: one image per variable required");
    PolyRingPtr target = images.empty() ? ring_ : images.front().ring();
    GradedPolynomial r(target);
    for (const auto& [m, c] : terms_) {
      GradedPolynomial t = constant(target, c);
      for (unsigned i = 0; i < ring_->nvars() && !t.is_zero(); ++i) {
        uint32_t e = m.exponent(i);
        if (e == 0) continue;
        t = t.times(images[i].pow(e, truncation), truncation);
      }
      r = r + t;
    }
    return r;
  }

  /// Reinterpret in a ring with more variables, matching by name.
  GradedPolynomial lifted(const PolyRingPtr& bigger) const {
    std::vector<unsigned> map(ring_->nvars());
    for (unsigned i = 0; i < ring_->nvars(); ++i) {
      auto idx = bigger->index_of(ring_->var(i).name);
      if (!idx || bigger->var(*idx).degree != ring_->var(i).degree)
        throw std::invalid_argument("lifted: variable not present in target ring");
      map[i] = *idx;
    }
    GradedPolynomial r(bigger);
    for (const auto& [m, c] : terms_) {
      std::vector<uint32_t> e(bigger->nvars(), 0);
      for (unsigned i = 0; i < ring_->nvars(); ++i) e[map[i]] = m.exponent(i);
      r.terms_.emplace(bigger->monomial(std::move(e)), c);
    }
    return r;
  }

  bool operator==(const GradedPolynomial& o) const {
    return rings_compatible(ring_, o.ring_) && terms_ == o.terms_;
  }

  /// Canonical text form, ascending in the monomial order: "1 + c1 + c1^4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      C a = c.abs();
      std::string body;
      if (m.is_constant()) {
        body = a.str();
      } else if (a.is_one()) {
        body = ring_->monomial_str(m);
      } else {
        body = a.str() + "*" + ring_->monomial_str(m);
      }
      if (first) {
        out += c.is_negative() ? "-" + body : body;
        first = false;
      } else {
        out += c.is_negative() ? " - " + body : " + " + body;
      }
    }
    return out;
  }

 private:
  void check_ring(const GradedPolynomial& o) const {
    if (!rings_compatible(ring_, o.ring_))
      throw std::invalid_argument("GradedPolynomial: ambient variable lists differ");
  }

  PolyRingPtr ring_;
  Terms terms_;
};

/// Graded polynomial ring modulo a homogeneous ideal, with degreewise
/// echelonized normal forms. Relations are multiplied by all monomials of
/// complementary degree and row-reduced; pivots are leading monomials and
/// the chosen basis of each degree slice is the set of non-pivot (standard)
/// monomials. Caches for every degree up to the truncation degree are built
/// eagerly at construction; afterwards the ring is read-only.
template <CoefficientField C>
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr ring, std::vector<GradedPolynomial<C>> relations, unsigned truncation)
      : ring_(std::move(ring)), relations_(std::move(relations)), truncation_(truncation) {
    for (const auto& r : relations_) {
      if (!rings_compatible(ring_, r.ring()))
        throw std::invalid_argument("QuotientRing: relation in a different ring");
      if (!r.is_homogeneous() || r.is_zero())
        throw std::invalid_argument("QuotientRing: relations must be nonzero homogeneous");
    }
    slices_.resize(truncation_ + 1);
    for (unsigned d = 0; d <= truncation_; ++d) build_slice(d);
  }

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<GradedPolynomial<C>>& relations() const { return relations_; }
  unsigned truncation_degree() const { return truncation_; }

  /// Deterministic monomial basis of the degree-d slice, descending order.
  const std::vector<Monomial>& basis_of_degree(unsigned d) const {
    check_degree(d);
    return slices_[d].basis;
  }

  unsigned dimension_of_degree(unsigned d) const { return static_cast<unsigned>(basis_of_degree(d).size()); }
  unsigned ideal_rank_of_degree(unsigned d) const {
    check_degree(d);
    return slices_[d].rank;
  }

  /// Unique representative supported on the per-degree standard monomials.
  GradedPolynomial<C> normal_form(const GradedPolynomial<C>& p) const {
    if (!rings_compatible(ring_, p.ring()))
      throw std::invalid_argument("normal_form: polynomial from a different ring");
    GradedPolynomial<C> out(ring_);
    for (const auto& [m, c] : p.terms()) {
      check_degree(m.degree());
      const Slice& s = slices_[m.degree()];
      auto it = s.rewrite.find(m);
      if (it == s.rewrite.end()) {
        out.add_term(m, c);
      } else {
        out = out + it->second.scaled(c);
      }
    }
    return out;
  }

  bool is_zero_in_quotient(const GradedPolynomial<C>& p) const { return normal_form(p).is_zero(); }
  bool equal_in_quotient(const GradedPolynomial<C>& a, const GradedPolynomial<C>& b) const {
    return normal_form(a - b).is_zero();
  }

 private:
  struct Slice {
    std::vector<Monomial> basis;  // standard monomials, descending
    std::map<Monomial, GradedPolynomial<C>, MonoGreater> rewrite;  // pivot -> basis combination
    unsigned rank = 0;
  };

  void check_degree(unsigned d) const {
    if (d > truncation_)
      throw std::out_of_range("QuotientRing: degree " + std::to_string(d) +
                              " above truncation degree " + std::to_string(truncation_));
  }

  void build_slice(unsigned d) {
    const std::vector<Monomial> mons = ring_->monomials_of_degree(d);  // descending
    std::map<Monomial, size_t, MonoGreater> col;
    for (size_t j = 0; j < mons.size(); ++j) col.emplace(mons[j], j);

    // Incremental reduced echelon form; pivot of a row is its leading
    // (leftmost, i.e. largest) monomial.
    std::vector<std::vector<C>> rows;          // reduced pivot rows
    std::vector<size_t> pivot_of_row;
    std::vector<long> row_of_col(mons.size(), -1);

    auto reduce_insert = [&](std::vector<C> row) {
      // Reduce against every existing pivot, left to right.
      for (size_t j = 0; j < row.size(); ++j) {
        if (row[j].is_zero() || row_of_col[j] < 0) continue;
        C f = row[j];
        const auto& pr = rows[static_cast<size_t>(row_of_col[j])];
        for (size_t t = j; t < row.size(); ++t) row[t] = row[t] - f * pr[t];
      }
      size_t j = 0;
      while (j < row.size() && row[j].is_zero()) ++j;
      if (j == row.size()) return;
      // Normalize and back-substitute into the existing rows.
      C inv = row[j].inverse();
      for (auto& x : row) x = x * inv;
      for (size_t i = 0; i < rows.size(); ++i) {
        C f = rows[i][j];
        if (f.is_zero()) continue;
        for (size_t t = j; t < row.size(); ++t) rows[i][t] = rows[i][t] - f * row[t];
      }
      row_of_col[j] = static_cast<long>(rows.size());
      rows.push_back(std::move(row));
      pivot_of_row.push_back(j);
    };

    for (const auto& rel : relations_) {
      unsigned e = rel.max_degree();
      if (e > d) continue;
      for (const auto& m : ring_->monomials_of_degree(d - e)) {
        std::vector<C> row(mons.size(), C::zero());
        for (const auto& [rm, rc] : rel.terms()) row[col.at(m.times(rm))] = rc;
        reduce_insert(std::move(row));
      }
    }

    Slice s;
    s.rank = static_cast<unsigned>(rows.size());
    for (size_t j = 0; j < mons.size(); ++j)
      if (row_of_col[j] < 0) s.basis.push_back(mons[j]);
    for (size_t i = 0; i < rows.size(); ++i) {
      GradedPolynomial<C> rhs(ring_);
      for (size_t j = pivot_of_row[i] + 1; j < mons.size(); ++j)
        if (!rows[i][j].is_zero() && row_of_col[j] < 0) rhs.add_term(mons[j], -rows[i][j]);
      s.rewrite.emplace(mons[pivot_of_row[i]], std::move(rhs));
    }
    slices_[d] = std::move(s);
  }

  PolyRingPtr ring_;
  std::vector<GradedPolynomial<C>> relations_;
  unsigned truncation_;
  std::vector<Slice> slices_;
};

}  // namespace cupkernel
