#pragma once

// Cohomology of Grassmannians Gr(k, C^n) with Schubert-class coefficients:
// Pieri rule, general products via Giambelli (Jacobi-Trudi determinants in
// the single-row classes), evaluation against the fundamental class. Serves
// as the integer-coefficient oracle ring independent of the polynomial
// presentation.

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cupkernel/coeff.hpp"
#include "cupkernel/polyring.hpp"

namespace cupkernel {

/// Weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts) : parts_(parts) { normalize(); }
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { normalize(); }

  static Partition row(unsigned p) { return p == 0 ? Partition{} : Partition{p}; }
  static Partition column(unsigned height) {
    return Partition(std::vector<unsigned>(height, 1));
  }
  static Partition full_box(unsigned rows, unsigned cols) {
    return Partition(std::vector<unsigned>(rows, cols));
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  size_t length() const { return parts_.size(); }
  unsigned size() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
  }

  bool fits_in_box(unsigned rows, unsigned cols) const {
    return parts_.size() <= rows && (parts_.empty() || parts_[0] <= cols);
  }

  /// Box complement, reversed: (cols - p_rows, ..., cols - p_1).
  Partition complement(unsigned rows, unsigned cols) const {
    if (!fits_in_box(rows, cols)) throw std::invalid_argument("complement: partition outside box");
    std::vector<unsigned> c(rows);
    for (unsigned i = 0; i < rows; ++i) c[i] = cols - part(rows - 1 - i);
    return Partition(std::move(c));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const {
    unsigned a = size(), b = o.size();
    if (a != b) return a < b;
    return parts_ < o.parts_;
  }

  std::string str() const {
    std::string s = "s[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

 private:
  void normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  std::vector<unsigned> parts_;
};

struct GrassmannianContext {
  unsigned k = 0;  // subspace dimension
  unsigned n = 0;  // ambient dimension
  unsigned rows() const { return k; }
  unsigned cols() const { return n - k; }
  unsigned dimension() const { return k * (n - k); }
  bool operator==(const GrassmannianContext&) const = default;
};

/// All partitions of the given size fitting in the rows x cols box,
/// ascending in the partition order above.
inline std::vector<Partition> partitions_in_box(unsigned size, unsigned rows, unsigned cols) {
  std::vector<Partition> out;
  std::vector<unsigned> acc;
  auto rec = [&](auto&& self, unsigned remaining, unsigned maxpart, unsigned slots) -> void {
    if (remaining == 0) {
      out.emplace_back(acc);
      return;
    }
    if (slots == 0) return;
    for (unsigned p = std::min(maxpart, remaining); p >= 1; --p) {
      acc.push_back(p);
      self(self, remaining - p, p, slots - 1);
      acc.pop_back();
    }
  };
  rec(rec, size, cols, rows);
  std::sort(out.begin(), out.end());
  return out;
}

template <CoefficientRing C>
class SchubertElement {
 public:
  using Terms = std::map<Partition, C>;

  explicit SchubertElement(GrassmannianContext ctx) : ctx_(ctx) {}

  static SchubertElement zero(GrassmannianContext ctx) { return SchubertElement(ctx); }
  static SchubertElement unit(GrassmannianContext ctx) {
    return single(ctx, Partition{}, C::one());
  }
  static SchubertElement single(GrassmannianContext ctx, const Partition& p, const C& c = C::one()) {
    SchubertElement e(ctx);
    if (!p.fits_in_box(ctx.rows(), ctx.cols()))
      throw std::invalid_argument("SchubertElement: partition outside the box");
    if (!c.is_zero()) e.terms_.emplace(p, c);
    return e;
  }

  const GrassmannianContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? C::zero() : it->second;
  }

  void add_term(const Partition& p, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SchubertElement operator+(const SchubertElement& o) const {
    check_ctx(o);
    SchubertElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
  }
  SchubertElement operator-(const SchubertElement& o) const {
    check_ctx(o);
    SchubertElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
  }
  SchubertElement operator-() const {
    SchubertElement r(ctx_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
  }
  SchubertElement scaled(const C& c) const {
    SchubertElement r(ctx_);
    for (const auto& [p, k] : terms_) r.add_term(p, k * c);
    return r;
  }

  SchubertElement homogeneous_part(unsigned d) const {
    SchubertElement r(ctx_);
    for (const auto& [p, c] : terms_)
      if (p.size() == d) r.terms_.emplace(p, c);
    return r;
  }

  bool operator==(const SchubertElement& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      C a = c.abs();
      std::string body = a.is_one() ? p.str() : a.str() + "*" + p.str();
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
  void check_ctx(const SchubertElement& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("SchubertElement: context mismatch");
  }

  GrassmannianContext ctx_;
  Terms terms_;
};

/// Horizontal p-strip additions inside the box: interlacing
/// mu_1 >= la_1 >= mu_2 >= la_2 >= ... with |mu| = |la| + p, mu_1 <= cols.
template <CoefficientRing C>
SchubertElement<C> pieri_multiply(const SchubertElement<C>& a, unsigned p) {
  const auto ctx = a.context();
  SchubertElement<C> out(ctx);
  const unsigned rows = ctx.rows(), cols = ctx.cols();
  for (const auto& [la, c] : a.terms()) {
    std::vector<unsigned> mu(rows, 0);
    auto rec = [&](auto&& self, unsigned row, unsigned remaining) -> void {
      if (row == rows) {
        if (remaining == 0) out.add_term(Partition(mu), c);
        return;
      }
      unsigned lo = la.part(row);
      unsigned hi = row == 0 ? cols : std::min(static_cast<unsigned>(la.part(row - 1)), cols);
      if (hi < lo) return;
      for (unsigned v = lo; v <= hi && v - lo <= remaining; ++v) {
        mu[row] = v;
        self(self, row + 1, remaining - (v - lo));
      }
      mu[row] = 0;
    };
    rec(rec, 0, p);
  }
  return out;
}

namespace detail {
// Jacobi-Trudi expansion of a single partition into signed products of
// single-row classes: det(h_{mu_i + j - i}).
template <CoefficientRing C>
void giambelli_terms(const Partition& mu, std::vector<std::pair<C, std::vector<unsigned>>>& out) {
  const size_t l = mu.length();
  if (l == 0) {
    out.emplace_back(C::one(), std::vector<unsigned>{});
    return;
  }
  std::vector<size_t> perm(l);
  for (size_t i = 0; i < l; ++i) perm[i] = i;
  // Iterate over all permutations; l <= 3 in practice.
  std::sort(perm.begin(), perm.end());
  do {
    // sign of the permutation
    int inversions = 0;
    for (size_t i = 0; i < l; ++i)
      for (size_t j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<unsigned> rowsizes;
    bool dead = false;
    for (size_t i = 0; i < l && !dead; ++i) {
      long v = static_cast<long>(mu.part(i)) + static_cast<long>(perm[i]) - static_cast<long>(i);
      if (v < 0) dead = true;
      else if (v > 0) rowsizes.push_back(static_cast<unsigned>(v));
    }
    if (!dead) out.emplace_back(inversions % 2 == 0 ? C::one() : -C::one(), std::move(rowsizes));
  } while (std::next_permutation(perm.begin(), perm.end()));
}
}  // namespace detail

/// Cup product: b is expanded via Giambelli into single-row classes, which
/// act on a through iterated Pieri.
template <CoefficientRing C>
SchubertElement<C> multiply(const SchubertElement<C>& a, const SchubertElement<C>& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("multiply: context mismatch");
  SchubertElement<C> out(a.context());
  for (const auto& [mu, cb] : b.terms()) {
    std::vector<std::pair<C, std::vector<unsigned>>> expansion;
    detail::giambelli_terms<C>(mu, expansion);
    for (const auto& [sign, rowsizes] : expansion) {
      SchubertElement<C> acc = a.scaled(cb * sign);
      for (unsigned p : rowsizes) acc = pieri_multiply(acc, p);
      out = out + acc;
    }
  }
  return out;
}

/// Coefficient of the full-box class; every other degree contributes zero.
template <CoefficientRing C>
C integrate(const SchubertElement<C>& a) {
  return a.coefficient(Partition::full_box(a.context().rows(), a.context().cols()));
}

/// c_i of the tautological subbundle: (-1)^i times the one-column class.
template <CoefficientRing C>
SchubertElement<C> chern_of_tautological(GrassmannianContext ctx, unsigned i) {
  if (i > ctx.k) throw std::out_of_range("chern_of_tautological: index exceeds the rank");
  C c = i % 2 == 0 ? C::one() : -C::one();
  return SchubertElement<C>::single(ctx, Partition::column(i), c);
}

/// c_i of the quotient bundle: the one-row class (zero beyond the box).
template <CoefficientRing C>
SchubertElement<C> chern_of_quotient(GrassmannianContext ctx, unsigned i) {
  if (i > ctx.cols()) return SchubertElement<C>::zero(ctx);
  return SchubertElement<C>::single(ctx, Partition::row(i));
}

template <CoefficientRing C>
SchubertElement<C> total_chern_of_tautological(GrassmannianContext ctx) {
  SchubertElement<C> r = SchubertElement<C>::zero(ctx);
  for (unsigned i = 0; i <= ctx.k; ++i) r = r + chern_of_tautological<C>(ctx, i);
  return r;
}

template <CoefficientRing C>
SchubertElement<C> total_chern_of_quotient(GrassmannianContext ctx) {
  SchubertElement<C> r = SchubertElement<C>::zero(ctx);
  for (unsigned i = 0; i <= ctx.cols(); ++i) r = r + chern_of_quotient<C>(ctx, i);
  return r;
}

/// Ring map from a polynomial in the variables c_1..c_k (Chern classes of
/// the tautological subbundle) into the Schubert ring.
template <CoefficientRing C>
SchubertElement<C> to_schubert(const GradedPolynomial<C>& p, GrassmannianContext ctx) {
  const auto& ring = *p.ring();
  std::vector<SchubertElement<C>> images;
  for (unsigned i = 0; i < ring.nvars(); ++i) {
    unsigned deg = ring.var(i).degree;
    if (deg > ctx.k) throw std::invalid_argument("to_schubert: variable degree exceeds the rank");
    images.push_back(chern_of_tautological<C>(ctx, deg));
  }
  SchubertElement<C> out = SchubertElement<C>::zero(ctx);
  for (const auto& [m, c] : p.terms()) {
    SchubertElement<C> t = SchubertElement<C>::unit(ctx).scaled(c);
    for (unsigned i = 0; i < ring.nvars() && !t.is_zero(); ++i)
      for (uint32_t e = 0; e < m.exponent(i); ++e) t = multiply(t, images[i]);
    out = out + t;
  }
  return out;
}

}  // namespace cupkernel
