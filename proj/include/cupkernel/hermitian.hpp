#pragma once

// Exact linear algebra over the Gaussian rationals for Hermitian matrices:
// rank by fraction-free elimination, inertia by characteristic polynomial
// and sign variations, families of pairwise anticommuting involutions, and
// the seven-parameter family certifying a rank lower bound.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cupkernel {

struct GaussianRational {
  mpq_class re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(long r) : re(r), im(0) {}                  // NOLINT
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i_unit() { return {mpq_class(0), mpq_class(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, mpq_class(-im)}; }
  mpq_class norm() const { return re * re + im * im; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }

  std::string str() const;
};

/// Dense square matrix over the Gaussian rationals, no symmetry constraint.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(unsigned n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static ComplexMatrix identity(unsigned n);

  unsigned size() const { return n_; }
  const GaussianRational& at(unsigned i, unsigned j) const { return e_[idx(i, j)]; }
  GaussianRational& at(unsigned i, unsigned j) { return e_[idx(i, j)]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix scaled(const GaussianRational& c) const;
  ComplexMatrix adjoint() const;

  bool is_hermitian() const;
  bool operator==(const ComplexMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  size_t idx(unsigned i, unsigned j) const { return static_cast<size_t>(i) * n_ + j; }
  unsigned n_;
  std::vector<GaussianRational> e_;
};

/// Hermitian matrix; the constructor rejects any non-Hermitian entry set.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix zero(unsigned n) { return HermitianMatrix(ComplexMatrix(n)); }
  static HermitianMatrix diagonal(const std::vector<mpq_class>& d);

  unsigned size() const { return m_.size(); }
  const GaussianRational& at(unsigned i, unsigned j) const { return m_.at(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

  /// Principal submatrix with row and column k removed (0-based).
  HermitianMatrix minor_without(unsigned k) const;

  bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

 private:
  ComplexMatrix m_;
};

struct Inertia {
  unsigned positive = 0, negative = 0, zero = 0;
  unsigned rank() const { return positive + negative; }
  unsigned m() const { return std::min(positive, negative); }
  bool operator==(const Inertia&) const = default;
};

/// Exact rank via fraction-free (Bareiss) elimination over the Gaussian
/// integers after clearing denominators, with column pivoting.
unsigned rank_exact(const ComplexMatrix& a);
inline unsigned rank_exact(const HermitianMatrix& a) { return rank_exact(a.matrix()); }

/// Characteristic polynomial coefficients, constant term first. Coefficients
/// of a Hermitian matrix are provably rational; a nonreal coefficient throws.
std::vector<mpq_class> characteristic_polynomial(const HermitianMatrix& a);

/// Signature by exact sign-variation count on the characteristic polynomial
/// (exact because Hermitian characteristic polynomials are real-rooted).
Inertia inertia(const HermitianMatrix& a);

inline unsigned m_value(const HermitianMatrix& a) { return inertia(a).m(); }

/// 2c+1 pairwise anticommuting Hermitian involutions of size q = 2^c(2b+1),
/// built by iterated 2x2 tensor steps and block-diagonal repetition.
struct CliffordFamily {
  unsigned q = 0;
  unsigned long b = 0, c = 0;
  std::vector<HermitianMatrix> matrices;
};
CliffordFamily clifford_family(unsigned q);

struct SpanCheck {
  bool symbolic_ok = false;
  bool trials_ok = false;
  unsigned long trials = 0;
  uint64_t seed = 0;
  std::optional<std::vector<mpq_class>> witness;  // singular nonzero combination
  std::string message;
  bool passed() const { return symbolic_ok && trials_ok; }
};

/// Checks (sum a_i A_i)^2 = (sum a_i^2) I symbolically in the a_i and on
/// random rational samples; both must pass. A failure carries a witness.
SpanCheck verify_invertible_span(const std::vector<HermitianMatrix>& family, unsigned long trials,
                                 uint64_t seed);
inline SpanCheck verify_invertible_span(const CliffordFamily& f, unsigned long trials,
                                        uint64_t seed) {
  return verify_invertible_span(f.matrices, trials, seed);
}

/// The seven-parameter family (alpha real; z, u, w Gaussian rational).
HermitianMatrix family_matrix(const mpq_class& alpha, const GaussianRational& z,
                              const GaussianRational& u, const GaussianRational& w);

struct FamilyCheck {
  bool sym_a5_square_ok = false;  // A5^2 = (alpha^2+|u|^2+|w|^2) I at z = 0
  bool sym_det1_ok = false;       // det A1 = |z|^2(|z|^2+|w|^2) modulo alpha^2 = |z|^2
  bool sym_det3_ok = false;       // det A3 vanishes exactly on {z=0} u {alpha^2=|z|^2}
  bool trials_ok = false;         // rank >= 4 on random nonzero tuples
  unsigned long trials = 0;
  uint64_t seed = 0;
  unsigned long rank4_count = 0, rank5_count = 0;
  std::string det_a3_formula;
  std::optional<std::vector<std::string>> counterexample;  // [alpha, z, u, w] as text
  std::string message;
  bool passed() const { return sym_a5_square_ok && sym_det1_ok && sym_det3_ok && trials_ok; }
};

FamilyCheck verify_family(unsigned long trials, uint64_t seed);

}  // namespace cupkernel
