#include "cupkernel/hermitian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cupkernel/numeric.hpp"
#include "cupkernel/polyring.hpp"

namespace cupkernel {

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re) != 0) out = re.get_str();
  if (sgn(im) != 0) {
    std::string imabs = mpq_class(abs(im)).get_str();
    std::string part = (imabs == "1") ? "i" : imabs + "*i";
    if (out.empty())
      out = (sgn(im) < 0 ? "-" : "") + part;
    else
      out += (sgn(im) < 0 ? " - " : " + ") + part;
  }
  return out;
}

ComplexMatrix ComplexMatrix::identity(unsigned n) {
  ComplexMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ComplexMatrix: size mismatch");
  ComplexMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ComplexMatrix: size mismatch");
  ComplexMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ComplexMatrix: size mismatch");
  ComplexMatrix r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned k = 0; k < n_; ++k) {
      const GaussianRational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
    }
  return r;
}

ComplexMatrix ComplexMatrix::scaled(const GaussianRational& c) const {
  ComplexMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

bool ComplexMatrix::is_hermitian() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = i; j < n_; ++j)
      if (!(at(i, j) == at(j, i).conj())) return false;
  return true;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian()) throw std::domain_error("HermitianMatrix: entries are not Hermitian");
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<mpq_class>& d) {
  ComplexMatrix m(static_cast<unsigned>(d.size()));
  for (unsigned i = 0; i < d.size(); ++i) m.at(i, i) = GaussianRational(d[i]);
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::minor_without(unsigned k) const {
  if (k >= size()) throw std::out_of_range("minor_without: index out of range");
  ComplexMatrix m(size() - 1);
  for (unsigned i = 0, ii = 0; i < size(); ++i) {
    if (i == k) continue;
    for (unsigned j = 0, jj = 0; j < size(); ++j) {
      if (j == k) continue;
      m.at(ii, jj) = at(i, j);
      ++jj;
    }
    ++ii;
  }
  return HermitianMatrix(std::move(m));
}

namespace {

struct GaussInt {
  mpz_class re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussInt conj() const { return {re, mpz_class(-im)}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
};

// Exact quotient in Z[i]; the divisions are exact by construction (Bareiss).
GaussInt div_exact(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  GaussInt t = a * b.conj();
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

}  // namespace

unsigned rank_exact(const ComplexMatrix& a) {
  const unsigned n = a.size();
  std::vector<std::vector<GaussInt>> m(n, std::vector<GaussInt>(n));
  for (unsigned i = 0; i < n; ++i) {
    mpz_class scale(1);
    for (unsigned j = 0; j < n; ++j) {
      scale = lcm(scale, a.at(i, j).re.get_den());
      scale = lcm(scale, a.at(i, j).im.get_den());
    }
    for (unsigned j = 0; j < n; ++j) {
      mpq_class re = a.at(i, j).re * scale;
      mpq_class im = a.at(i, j).im * scale;
      m[i][j] = {re.get_num(), im.get_num()};
    }
  }

  GaussInt prev{mpz_class(1), mpz_class(0)};
  unsigned rank = 0;
  for (unsigned step = 0; step < n; ++step) {
    // column pivoting: scan columns left to right for a nonzero entry
    unsigned pi = n, pj = n;
    for (unsigned j = step; j < n && pj == n; ++j)
      for (unsigned i = step; i < n; ++i)
        if (!m[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pj == n) break;
    if (pi != step) std::swap(m[pi], m[step]);
    if (pj != step)
      for (unsigned i = 0; i < n; ++i) std::swap(m[i][pj], m[i][step]);
    ++rank;
    for (unsigned i = step + 1; i < n; ++i)
      for (unsigned j = step + 1; j < n; ++j)
        m[i][j] = div_exact(m[step][step] * m[i][j] - m[i][step] * m[step][j], prev);
    prev = m[step][step];
  }
  return rank;
}

std::vector<mpq_class> characteristic_polynomial(const HermitianMatrix& a) {
  const unsigned n = a.size();
  // Faddeev-LeVerrier: M_k = A (M_{k-1} + a_{k-1} I), a_k = -tr(M_k)/k.
  std::vector<GaussianRational> coeff(n + 1);
  coeff[n] = GaussianRational(1);
  ComplexMatrix mk(n);
  GaussianRational ak(1);
  for (unsigned k = 1; k <= n; ++k) {
    ComplexMatrix shifted = mk + ComplexMatrix::identity(n).scaled(ak);
    mk = a.matrix() * shifted;
    GaussianRational tr;
    for (unsigned i = 0; i < n; ++i) tr = tr + mk.at(i, i);
    ak = GaussianRational(mpq_class(-tr.re / k), mpq_class(-tr.im / k));
    coeff[n - k] = ak;
  }
  std::vector<mpq_class> out(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    if (!coeff[i].is_real())
      throw std::logic_error("characteristic_polynomial: nonreal coefficient on Hermitian input");
    out[i] = coeff[i].re;
  }
  return out;
}

namespace {

unsigned sign_variations(const std::vector<mpq_class>& c) {
  int last = 0;
  unsigned var = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

}  // namespace

Inertia inertia(const HermitianMatrix& a) {
  const unsigned n = a.size();
  std::vector<mpq_class> p = characteristic_polynomial(a);
  unsigned zero = 0;
  while (zero <= n && sgn(p[zero]) == 0) ++zero;
  std::vector<mpq_class> q(p.begin() + zero, p.end());  // q(0) != 0, real-rooted
  unsigned positive = sign_variations(q);
  std::vector<mpq_class> qneg = q;
  for (size_t i = 0; i < qneg.size(); ++i)
    if (i % 2 == 1) qneg[i] = -qneg[i];
  unsigned negative = sign_variations(qneg);
  if (positive + negative + zero != n)
    throw std::logic_error("inertia: sign variation count inconsistent with real-rootedness");
  return Inertia{positive, negative, zero};
}

namespace {

ComplexMatrix kron2(const ComplexMatrix& two, const ComplexMatrix& a) {
  const unsigned n = a.size();
  ComplexMatrix r(2 * n);
  for (unsigned bi = 0; bi < 2; ++bi)
    for (unsigned bj = 0; bj < 2; ++bj) {
      const GaussianRational& f = two.at(bi, bj);
      if (f.is_zero()) continue;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.at(bi * n + i, bj * n + j) = f * a.at(i, j);
    }
  return r;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m.at(0, 1) = GaussianRational(1);
  m.at(1, 0) = GaussianRational(1);
  return m;
}
ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m.at(0, 1) = -GaussianRational::i_unit();
  m.at(1, 0) = GaussianRational::i_unit();
  return m;
}
ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m.at(0, 0) = GaussianRational(1);
  m.at(1, 1) = GaussianRational(-1);
  return m;
}

ComplexMatrix block_repeat(const ComplexMatrix& a, unsigned copies) {
  const unsigned n = a.size();
  ComplexMatrix r(n * copies);
  for (unsigned b = 0; b < copies; ++b)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) r.at(b * n + i, b * n + j) = a.at(i, j);
  return r;
}

}  // namespace

CliffordFamily clifford_family(unsigned q) {
  if (q < 1) throw std::invalid_argument("clifford_family: q must be >= 1");
  TwoAdic t = two_adic(q);

  // Anticommuting involutions of size 2^c: start from (1) and repeatedly
  // apply A -> sx (x) A, adding sy (x) I and sz (x) I.
  std::vector<ComplexMatrix> fam;
  {
    ComplexMatrix one(1);
    one.at(0, 0) = GaussianRational(1);
    fam.push_back(one);
  }
  for (unsigned long step = 0; step < t.c; ++step) {
    const unsigned n = fam.front().size();
    std::vector<ComplexMatrix> next;
    for (const auto& a : fam) next.push_back(kron2(pauli_x(), a));
    next.push_back(kron2(pauli_y(), ComplexMatrix::identity(n)));
    next.push_back(kron2(pauli_z(), ComplexMatrix::identity(n)));
    fam = std::move(next);
  }

  CliffordFamily out;
  out.q = q;
  out.b = t.b;
  out.c = t.c;
  for (const auto& a : fam)
    out.matrices.emplace_back(block_repeat(a, static_cast<unsigned>(2 * t.b + 1)));
  return out;
}

namespace {

mpq_class random_rational(SplitMix64& rng) {
  long num = rng.next_int(-9, 9);
  long den = rng.next_int(1, 9);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational random_gaussian(SplitMix64& rng) {
  return {random_rational(rng), random_rational(rng)};
}

// Complex polynomial as a real/imaginary pair over the rationals.
struct CPoly {
  GradedPolynomial<QQ> re, im;

  explicit CPoly(const PolyRingPtr& ring)
      : re(GradedPolynomial<QQ>::zero(ring)), im(GradedPolynomial<QQ>::zero(ring)) {}
  CPoly(GradedPolynomial<QQ> r, GradedPolynomial<QQ> i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CPoly conj() const { return {re, -im}; }
  CPoly operator+(const CPoly& o) const { return {re + o.re, im + o.im}; }
  CPoly operator-(const CPoly& o) const { return {re - o.re, im - o.im}; }
  CPoly operator-() const { return {-re, -im}; }
  CPoly operator*(const CPoly& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

using CPolyMatrix = std::vector<std::vector<CPoly>>;

CPoly cdet(const CPolyMatrix& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  CPoly acc(m[0][0].re.ring());
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    CPolyMatrix sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<CPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    CPoly term = m[0][j] * cdet(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

CPolyMatrix cpoly_mul(const CPolyMatrix& a, const CPolyMatrix& b) {
  const size_t n = a.size();
  CPolyMatrix r(n, std::vector<CPoly>(n, CPoly(a[0][0].re.ring())));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Replace alpha^2 by `square` until the polynomial is at most linear in the
// variable at index `var` (univariate division by var^2 - square).
GradedPolynomial<QQ> reduce_even_power(const GradedPolynomial<QQ>& p, unsigned var,
                                       const GradedPolynomial<QQ>& square) {
  GradedPolynomial<QQ> cur = p;
  for (;;) {
    GradedPolynomial<QQ> next(cur.ring());
    bool changed = false;
    for (const auto& [m, c] : cur.terms()) {
      uint32_t e = m.exponent(var);
      if (e >= 2) {
        std::vector<uint32_t> exps = m.exponents();
        exps[var] -= 2;
        auto rest = GradedPolynomial<QQ>::term(cur.ring(), cur.ring()->monomial(std::move(exps)), c);
        next = next + rest * square;
        changed = true;
      } else {
        next.add_term(m, c);
      }
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

}  // namespace

SpanCheck verify_invertible_span(const std::vector<HermitianMatrix>& family, unsigned long trials,
                                 uint64_t seed) {
  SpanCheck out;
  out.trials = trials;
  out.seed = seed;
  if (family.empty()) throw std::invalid_argument("verify_invertible_span: empty family");
  const unsigned q = family.front().size();
  const unsigned d = static_cast<unsigned>(family.size());

  // Symbolic identity in the span coefficients.
  std::vector<GradedVariable> vars;
  for (unsigned i = 0; i < d; ++i) vars.push_back({"a" + std::to_string(i + 1), 1});
  PolyRingPtr ring = PolyRing::make(std::move(vars));

  CPolyMatrix m(q, std::vector<CPoly>(q, CPoly(ring)));
  for (unsigned t = 0; t < d; ++t) {
    auto at = GradedPolynomial<QQ>::variable(ring, t);
    for (unsigned i = 0; i < q; ++i)
      for (unsigned j = 0; j < q; ++j) {
        const GaussianRational& e = family[t].at(i, j);
        if (e.is_zero()) continue;
        m[i][j] = m[i][j] + CPoly(at.scaled(QQ(e.re)), at.scaled(QQ(e.im)));
      }
  }
  CPolyMatrix sq = cpoly_mul(m, m);
  GradedPolynomial<QQ> norm2(ring);
  for (unsigned i = 0; i < d; ++i) {
    auto ai = GradedPolynomial<QQ>::variable(ring, i);
    norm2 = norm2 + ai * ai;
  }
  out.symbolic_ok = true;
  for (unsigned i = 0; i < q && out.symbolic_ok; ++i)
    for (unsigned j = 0; j < q && out.symbolic_ok; ++j) {
      const GradedPolynomial<QQ>& want = (i == j) ? norm2 : GradedPolynomial<QQ>::zero(ring);
      if (!(sq[i][j].re == want) || !sq[i][j].im.is_zero()) {
        out.symbolic_ok = false;
        out.message = "square identity fails at entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
      }
    }

  if (!out.symbolic_ok && d <= 12) {
    // Hunt for a concrete singular nonzero combination as a witness.
    std::vector<long> c(d, -1);
    for (;;) {
      bool allzero = std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
      if (!allzero) {
        ComplexMatrix s(q);
        for (unsigned t = 0; t < d; ++t)
          if (c[t] != 0) s = s + family[t].matrix().scaled(GaussianRational(c[t]));
        if (rank_exact(s) < q) {
          std::vector<mpq_class> w;
          for (long x : c) w.emplace_back(x);
          out.witness = std::move(w);
          break;
        }
      }
      unsigned pos = 0;
      while (pos < d && c[pos] == 1) c[pos++] = -1;
      if (pos == d) break;
      ++c[pos];
    }
  }

  // Randomized trials.
  SplitMix64 rng(seed);
  out.trials_ok = true;
  for (unsigned long t = 0; t < trials && out.trials_ok; ++t) {
    std::vector<mpq_class> a(d);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& x : a) {
        x = random_rational(rng);
        nonzero = nonzero || sgn(x) != 0;
      }
    }
    ComplexMatrix s(q);
    for (unsigned i = 0; i < d; ++i)
      if (sgn(a[i]) != 0) s = s + family[i].matrix().scaled(GaussianRational(a[i]));
    if (rank_exact(s) != q) {
      out.trials_ok = false;
      out.witness = a;
      out.message = "random combination is singular";
    }
  }
  return out;
}

HermitianMatrix family_matrix(const mpq_class& alpha, const GaussianRational& z,
                              const GaussianRational& u, const GaussianRational& w) {
  ComplexMatrix m(5);
  GaussianRational a(alpha);
  m.at(0, 0) = a;
  m.at(0, 1) = z;
  m.at(0, 2) = u;
  m.at(0, 3) = w;
  m.at(1, 0) = z.conj();
  m.at(1, 1) = a;
  m.at(1, 2) = w.conj();
  m.at(1, 3) = -u.conj();
  m.at(2, 0) = u.conj();
  m.at(2, 1) = w;
  m.at(2, 2) = -a;
  m.at(2, 3) = z;
  m.at(3, 0) = w.conj();
  m.at(3, 1) = -u;
  m.at(3, 2) = z.conj();
  m.at(3, 3) = -a;
  m.at(3, 4) = z;
  m.at(4, 3) = z.conj();
  return HermitianMatrix(std::move(m));
}

namespace {

// Symbolic seven-parameter family over Q[alpha, zr, zi, ur, ui, wr, wi];
// setting zero_z replaces z by 0.
CPolyMatrix symbolic_family(const PolyRingPtr& ring, bool zero_z) {
  auto var = [&](const char* n) { return GradedPolynomial<QQ>::variable(ring, n); };
  auto zerop = GradedPolynomial<QQ>::zero(ring);
  CPoly a{var("alpha"), zerop};
  CPoly z = zero_z ? CPoly(ring) : CPoly{var("zr"), var("zi")};
  CPoly u{var("ur"), var("ui")};
  CPoly w{var("wr"), var("wi")};
  CPoly o(ring);

  CPolyMatrix m(5, std::vector<CPoly>(5, o));
  m[0] = {a, z, u, w, o};
  m[1] = {z.conj(), a, w.conj(), -u.conj(), o};
  m[2] = {u.conj(), w, -a, z, o};
  m[3] = {w.conj(), -u, z.conj(), -a, z};
  m[4] = {o, o, o, z.conj(), o};
  return m;
}

CPolyMatrix drop_row_col(const CPolyMatrix& m, size_t k) {
  CPolyMatrix r;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i == k) continue;
    std::vector<CPoly> row;
    for (size_t j = 0; j < m.size(); ++j)
      if (j != k) row.push_back(m[i][j]);
    r.push_back(std::move(row));
  }
  return r;
}

}  // namespace

FamilyCheck verify_family(unsigned long trials, uint64_t seed) {
  FamilyCheck out;
  out.trials = trials;
  out.seed = seed;

  PolyRingPtr ring = PolyRing::make({{"alpha", 1},
                                     {"zr", 1},
                                     {"zi", 1},
                                     {"ur", 1},
                                     {"ui", 1},
                                     {"wr", 1},
                                     {"wi", 1}});
  auto var = [&](const char* n) { return GradedPolynomial<QQ>::variable(ring, n); };
  auto sq = [&](const char* n) { return var(n) * var(n); };
  GradedPolynomial<QQ> z2 = sq("zr") + sq("zi");
  GradedPolynomial<QQ> u2 = sq("ur") + sq("ui");
  GradedPolynomial<QQ> w2 = sq("wr") + sq("wi");
  GradedPolynomial<QQ> a2 = sq("alpha");

  // (a) A5^2 = (alpha^2+|u|^2+|w|^2) I once z = 0.
  {
    CPolyMatrix a5 = drop_row_col(symbolic_family(ring, /*zero_z=*/true), 4);
    CPolyMatrix got = cpoly_mul(a5, a5);
    GradedPolynomial<QQ> want = a2 + u2 + w2;
    out.sym_a5_square_ok = true;
    for (size_t i = 0; i < 4 && out.sym_a5_square_ok; ++i)
      for (size_t j = 0; j < 4 && out.sym_a5_square_ok; ++j) {
        const auto& expect = (i == j) ? want : GradedPolynomial<QQ>::zero(ring);
        if (!(got[i][j].re == expect) || !got[i][j].im.is_zero()) {
          out.sym_a5_square_ok = false;
          out.message = "A5 square identity fails";
        }
      }
  }

  // (b) det A1 = |z|^2(|z|^2+|w|^2) modulo alpha^2 - |z|^2.
  {
    CPoly d1 = cdet(drop_row_col(symbolic_family(ring, false), 0));
    GradedPolynomial<QQ> target = z2 * (z2 + w2);
    GradedPolynomial<QQ> diff = d1.re - target;
    auto reduced = reduce_even_power(diff, *ring->index_of("alpha"), z2);
    out.sym_det1_ok = reduced.is_zero() && d1.im.is_zero();
    if (!out.sym_det1_ok) out.message = "det A1 reduction fails";
  }

  // (c) det A3 vanishes exactly on {z=0} u {alpha^2=|z|^2}: the determinant
  // is |z|^2 (|z|^2 - alpha^2) on the nose.
  {
    CPoly d3 = cdet(drop_row_col(symbolic_family(ring, false), 2));
    GradedPolynomial<QQ> want = z2 * (z2 - a2);
    out.sym_det3_ok = (d3.re == want) && d3.im.is_zero();
    out.det_a3_formula = "(zr^2+zi^2)*(zr^2+zi^2-alpha^2)";
    if (!out.sym_det3_ok) {
      out.det_a3_formula = d3.re.str();
      out.message = "det A3 closed form mismatch";
    }
  }

  // (d) Randomized rank bound.
  SplitMix64 rng(seed);
  out.trials_ok = true;
  for (unsigned long t = 0; t < trials && out.trials_ok; ++t) {
    mpq_class alpha;
    GaussianRational z, u, w;
    do {
      alpha = random_rational(rng);
      z = random_gaussian(rng);
      u = random_gaussian(rng);
      w = random_gaussian(rng);
    } while (sgn(alpha) == 0 && z.is_zero() && u.is_zero() && w.is_zero());
    unsigned r = rank_exact(family_matrix(alpha, z, u, w));
    if (r == 4)
      ++out.rank4_count;
    else if (r == 5)
      ++out.rank5_count;
    else {
      out.trials_ok = false;
      out.counterexample = std::vector<std::string>{mpq_class(alpha).get_str(), z.str(), u.str(),
                                                    w.str()};
      out.message = "rank below 4 at a nonzero tuple";
    }
  }
  return out;
}

}  // namespace cupkernel
