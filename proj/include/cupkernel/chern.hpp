#pragma once

// Characteristic-class calculus for formal bundles over a graded polynomial
// base: Whitney sums, duals, tensor products through the splitting
// principle, Segre classes, projective-bundle quotient rings and the
// pushforward along them.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cupkernel/coeff.hpp"
#include "cupkernel/polyring.hpp"

namespace cupkernel {

/// A bundle presented by rank and total class (constant term 1) in a named
/// ambient ring. The total class is a raw polynomial; reduction to a
/// quotient ring is the caller's concern.
template <CoefficientRing C>
struct BundleClass {
  std::string name;
  unsigned rank = 0;
  GradedPolynomial<C> total;

  BundleClass(std::string n, unsigned r, GradedPolynomial<C> t)
      : name(std::move(n)), rank(r), total(std::move(t)) {
    if (!total.constant_term().is_one())
      throw std::invalid_argument("BundleClass: total class must have constant term 1");
  }

  static BundleClass trivial(PolyRingPtr ring, unsigned rank, std::string name = "trivial") {
    return BundleClass(std::move(name), rank, GradedPolynomial<C>::one(std::move(ring)));
  }

  GradedPolynomial<C> chern(unsigned i) const { return total.graded_part(i); }
};

template <CoefficientRing C>
BundleClass<C> whitney_sum(const BundleClass<C>& e, const BundleClass<C>& f, unsigned truncation) {
  if (!rings_compatible(e.total.ring(), f.total.ring()))
    throw std::invalid_argument("whitney_sum: ambient rings differ");
  return BundleClass<C>(e.name + "+" + f.name, e.rank + f.rank, e.total.times(f.total, truncation));
}

template <CoefficientRing C>
BundleClass<C> whitney_power(const BundleClass<C>& e, unsigned copies, unsigned truncation) {
  BundleClass<C> acc = BundleClass<C>::trivial(e.total.ring(), 0, e.name + "^0");
  for (unsigned i = 0; i < copies; ++i) acc = whitney_sum(acc, e, truncation);
  acc.name = e.name + "^" + std::to_string(copies);
  return acc;
}

/// Dual bundle: c_i changes sign for odd i (identity in characteristic 2).
template <CoefficientRing C>
BundleClass<C> dual(const BundleClass<C>& e) {
  GradedPolynomial<C> t(e.total.ring());
  for (unsigned d = 0; d <= e.total.max_degree(); ++d) {
    auto part = e.total.graded_part(d);
    t = t + (d % 2 == 0 ? part : -part);
  }
  return BundleClass<C>(e.name + "~", e.rank, std::move(t));
}

/// Segre class: the graded inverse of the total class.
template <CoefficientRing C>
GradedPolynomial<C> segre(const BundleClass<C>& e, unsigned truncation) {
  return e.total.inverse_graded(truncation);
}

namespace detail {

// Lex order with the first variable most significant; the leading exponent
// vector of a symmetric polynomial under this order is weakly decreasing.
inline bool root_lex_less(const Monomial& a, const Monomial& b, unsigned nvars) {
  for (unsigned i = 0; i < nvars; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
  }
  return false;
}

template <CoefficientRing C>
GradedPolynomial<C> elementary_symmetric(const PolyRingPtr& ring, unsigned from, unsigned count,
                                         unsigned index) {
  // e_index of the variables [from, from+count)
  GradedPolynomial<C> acc = GradedPolynomial<C>::one(ring);
  for (unsigned i = 0; i < count; ++i) {
    auto factor = GradedPolynomial<C>::one(ring) + GradedPolynomial<C>::variable(ring, from + i);
    acc = acc * factor;
  }
  // acc = prod (1 + x_i); extract the part with exactly `index` variables,
  // i.e. weighted degree index since all roots have degree 1.
  return acc.graded_part(index);
}

}  // namespace detail

/// One rewrite step result: coefficient times a product of elementary
/// symmetric polynomials e_{ei}(x-block) * e_{fj}(y-block).
template <CoefficientRing C>
struct SymmetricTerm {
  C coeff;
  std::vector<unsigned> e_indices;  // x-block elementary indices
  std::vector<unsigned> f_indices;  // y-block elementary indices
};

/// Rewrite a polynomial symmetric separately in x_1..x_r and y_1..y_s
/// (all of degree 1, x-block first) as a combination of products of
/// elementary symmetric polynomials, by leading-term subtraction.
template <CoefficientRing C>
std::vector<SymmetricTerm<C>> symmetric_rewrite(GradedPolynomial<C> p, unsigned r, unsigned s) {
  const PolyRingPtr ring = p.ring();
  const unsigned n = ring->nvars();
  if (n != r + s) throw std::invalid_argument("symmetric_rewrite: variable count mismatch");

  // Cache e_i(x) and e_j(y).
  std::vector<GradedPolynomial<C>> ex, ey;
  for (unsigned i = 0; i <= r; ++i) ex.push_back(detail::elementary_symmetric<C>(ring, 0, r, i));
  for (unsigned j = 0; j <= s; ++j) ey.push_back(detail::elementary_symmetric<C>(ring, r, s, j));

  std::vector<SymmetricTerm<C>> out;
  while (!p.is_zero()) {
    // Leading term under root-lex within the top degree present.
    const Monomial* lead = nullptr;
    C lead_c = C::zero();
    unsigned top = p.max_degree();
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != top) continue;
      if (!lead || detail::root_lex_less(*lead, m, n)) {
        lead = &m;
        lead_c = c;
      }
    }
    // Conjugate-partition picture: the product of e_{lambda'_k} has leading
    // monomial x^lambda, where lambda'_k counts exponents >= k.
    std::vector<unsigned> eidx, fidx;
    auto column_counts = [](std::vector<unsigned> lam, std::vector<unsigned>& outv) {
      for (size_t i = 1; i < lam.size(); ++i)
        if (lam[i] > lam[i - 1]) throw std::logic_error("symmetric_rewrite: input not symmetric");
      unsigned maxp = lam.empty() ? 0 : lam[0];
      for (unsigned kk = 1; kk <= maxp; ++kk) {
        unsigned cnt = 0;
        for (unsigned v : lam) cnt += (v >= kk) ? 1 : 0;
        outv.push_back(cnt);
      }
    };
    std::vector<unsigned> lamx, lamy;
    for (unsigned i = 0; i < r; ++i) lamx.push_back(lead->exponent(i));
    while (!lamx.empty() && lamx.back() == 0) lamx.pop_back();
    for (unsigned j = 0; j < s; ++j) lamy.push_back(lead->exponent(r + j));
    while (!lamy.empty() && lamy.back() == 0) lamy.pop_back();
    column_counts(lamx, eidx);
    column_counts(lamy, fidx);

    GradedPolynomial<C> prod = GradedPolynomial<C>::constant(ring, lead_c);
    for (unsigned i : eidx) prod = prod * ex[i];
    for (unsigned j : fidx) prod = prod * ey[j];
    p = p - prod;
    out.push_back(SymmetricTerm<C>{lead_c, std::move(eidx), std::move(fidx)});
  }
  return out;
}

/// Tensor product via the splitting principle: expand prod_{i,j}(1+x_i+y_j)
/// in a universal ring of Chern roots, rewrite in elementary symmetric
/// polynomials of the two blocks, substitute the Chern classes of E and F.
template <CoefficientRing C>
BundleClass<C> tensor(const BundleClass<C>& e, const BundleClass<C>& f, unsigned truncation) {
  if (!rings_compatible(e.total.ring(), f.total.ring()))
    throw std::invalid_argument("tensor: ambient rings differ");
  const PolyRingPtr base = e.total.ring();
  const unsigned r = e.rank, s = f.rank;
  if (r == 0 || s == 0)
    return BundleClass<C>(e.name + "x" + f.name, 0, GradedPolynomial<C>::one(base));

  std::vector<GradedVariable> roots;
  for (unsigned i = 0; i < r; ++i) roots.push_back({"x" + std::to_string(i + 1), 1});
  for (unsigned j = 0; j < s; ++j) roots.push_back({"y" + std::to_string(j + 1), 1});
  PolyRingPtr uring = PolyRing::make(std::move(roots));

  GradedPolynomial<C> prod = GradedPolynomial<C>::one(uring);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < s; ++j) {
      auto factor = GradedPolynomial<C>::one(uring) +
                    GradedPolynomial<C>::variable(uring, i) +
                    GradedPolynomial<C>::variable(uring, r + j);
      prod = prod.times(factor, truncation);
    }

  auto terms = symmetric_rewrite<C>(prod, r, s);
  GradedPolynomial<C> total(base);
  for (const auto& t : terms) {
    GradedPolynomial<C> acc = GradedPolynomial<C>::constant(base, t.coeff);
    for (unsigned i : t.e_indices) acc = acc.times(e.chern(i), truncation);
    for (unsigned j : t.f_indices) acc = acc.times(f.chern(j), truncation);
    total = total + acc;
  }
  return BundleClass<C>(e.name + "x" + f.name, r * s, std::move(total));
}

/// Quotient ring of the projectivization of E (one-dimensional subspaces),
/// h the first Chern class of the dual tautological line: base relations
/// plus sum_{i=0..r} c_i(E) h^{r-i}.
template <CoefficientField C>
struct ProjectiveBundleContext {
  BundleClass<C> bundle;                       // over the base variable ring
  PolyRingPtr total_ring;                      // base variables + h
  unsigned h_index = 0;
  unsigned fiber_dimension = 0;                // rank - 1
  GradedPolynomial<C> relation;                // the defining relation, in total_ring
  std::shared_ptr<const QuotientRing<C>> ring; // quotient of total_ring

  GradedPolynomial<C> h_power(unsigned k) const {
    return GradedPolynomial<C>::variable(total_ring, h_index, k);
  }
};

template <CoefficientField C>
ProjectiveBundleContext<C> projective_bundle_ring(const QuotientRing<C>& base,
                                                  const BundleClass<C>& e, unsigned truncation,
                                                  const std::string& h_name = "h") {
  if (e.rank < 1) throw std::invalid_argument("projective_bundle_ring: rank must be >= 1");
  if (!rings_compatible(base.ring(), e.total.ring()))
    throw std::invalid_argument("projective_bundle_ring: bundle not over the base ring");
  PolyRingPtr total = base.ring()->extended({h_name, 1});

  GradedPolynomial<C> rel(total);
  for (unsigned i = 0; i <= e.rank; ++i) {
    auto ci = e.chern(i).lifted(total);
    if (ci.is_zero()) continue;
    rel = rel + ci * GradedPolynomial<C>::variable(total, h_name, e.rank - i);
  }

  std::vector<GradedPolynomial<C>> rels;
  for (const auto& r : base.relations()) rels.push_back(r.lifted(total));
  rels.push_back(rel);

  ProjectiveBundleContext<C> ctx{e, total, *total->index_of(h_name), e.rank - 1, rel,
                                 std::make_shared<const QuotientRing<C>>(total, rels, truncation)};
  return ctx;
}

namespace detail {
template <CoefficientRing C>
GradedPolynomial<C> strip_h(const Monomial& m, const PolyRingPtr& base, unsigned h_index, const C& c) {
  std::vector<uint32_t> e(base->nvars(), 0);
  for (unsigned i = 0, k = 0; i < base->nvars() + 1; ++i) {
    if (i == h_index) continue;
    e[k++] = m.exponent(i);
  }
  return GradedPolynomial<C>::term(base, base->monomial(std::move(e)), c);
}
}  // namespace detail

/// Pushforward along P(E) -> base on a representative written in the base
/// variables and h: linear over the base, h^{r-1+j} maps to the j-th Segre
/// class, lower h-powers to zero. Well defined modulo the bundle relation.
template <CoefficientRing C>
GradedPolynomial<C> pushforward_formal(const BundleClass<C>& e, const GradedPolynomial<C>& cls,
                                       const PolyRingPtr& base, unsigned h_index,
                                       unsigned truncation) {
  const unsigned r = e.rank;
  GradedPolynomial<C> sege = e.total.inverse_graded(truncation);
  GradedPolynomial<C> out(base);
  for (const auto& [m, c] : cls.terms()) {
    uint32_t hk = m.exponent(h_index);
    if (hk + 1 < r) continue;
    unsigned j = hk + 1 - r;
    auto basepart = detail::strip_h<C>(m, base, h_index, c);
    out = out + basepart.times(sege.graded_part(j), truncation);
  }
  return out;
}

template <CoefficientField C>
GradedPolynomial<C> pushforward(const ProjectiveBundleContext<C>& ctx,
                                const GradedPolynomial<C>& cls, const PolyRingPtr& base,
                                unsigned truncation) {
  return pushforward_formal(ctx.bundle, cls, base, ctx.h_index, truncation);
}

}  // namespace cupkernel
