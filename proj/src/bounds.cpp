#include "cupkernel/bounds.hpp"

#include <stdexcept>

#include "cupkernel/numeric.hpp"

namespace cupkernel {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::TrivialZero: return "trivial-zero";
    case Provenance::AdamsFormula: return "adams-formula";
    case Provenance::Section3Parity: return "section3-parity";
    case Provenance::ExplicitFamily: return "explicit-family";
    case Provenance::Unknown: return "unknown";
  }
  return "unknown";
}

std::string kernel_case_name(KernelCase c) {
  switch (c) {
    case KernelCase::Injective: return "injective";
    case KernelCase::QEquals2N: return "q-equals-2n";
    case KernelCase::Q5N2: return "q5n2";
    case KernelCase::OutOfTable: return "out-of-table";
  }
  return "out-of-table";
}

DEntry d_bound(unsigned q, unsigned m, const VerificationStatus& status) {
  if (q < 1 || m < 1) throw std::invalid_argument("d_bound: q and m must be >= 1");
  DEntry e;
  e.q = q;
  e.m = m;
  const TwoAdic t = two_adic(q);
  if (m > q) {
    // rank >= m is impossible for q x q matrices
    e.lower = 0;
    e.upper = 0;
    e.provenance = Provenance::TrivialZero;
    return e;
  }
  if (m == q) {
    long v = static_cast<long>(2 * t.c + 1);
    e.lower = v;
    e.upper = v;
    e.provenance = Provenance::AdamsFormula;
    return e;
  }
  if (q == 5 && m == 4) {
    e.lower = 7;
    e.upper = 8;
    e.provenance = Provenance::Section3Parity;
    e.verified_this_run = status.section3_parity_passed && status.explicit_family_passed;
    e.note = e.verified_this_run
                 ? "upper bound from the parity computation, lower bound from the explicit "
                   "seven-parameter family; both verified in this run"
                 : "upper bound from the parity computation, lower bound from the explicit "
                   "seven-parameter family; cited (verifications not run)";
    return e;
  }
  // 1 <= m < q: only the monotone lower bound from the m = q entry is known.
  e.lower = static_cast<long>(2 * t.c + 1);
  e.upper = std::nullopt;
  e.provenance = Provenance::Unknown;
  e.note = "no upper bound known in general";
  return e;
}

KernelBoundReport kernel_bound(unsigned n, unsigned q, const VerificationStatus& status) {
  if (n < 1) throw std::invalid_argument("kernel_bound: n must be >= 1");
  KernelBoundReport r;
  r.n = n;
  r.q = q;
  if (q >= 1) {
    TwoAdic t = two_adic(q);
    r.b = t.b;
    r.c = t.c;
  }
  const long full = static_cast<long>(q) * (2l * q - 1);  // dim of the exterior square

  if (q <= 2 * n - 1) {
    r.applicable_case = KernelCase::Injective;
    r.kappa_bound = 0;
    r.ker20_bound = 0;
    r.total_bound = 0;
    r.im_phi_lower = full;
    r.b2_lower = full;
    return r;
  }
  if (q == 2 * n) {
    r.applicable_case = KernelCase::QEquals2N;
    r.kappa_bound = static_cast<long>(2 * r.c + 1);
    r.ker20_bound = 1;
    r.total_bound = *r.kappa_bound + 2 * *r.ker20_bound;  // 2c+3
    r.im_phi_lower = full - *r.total_bound;
    r.b2_lower = r.im_phi_lower;
    return r;
  }
  if (q == 5 && n == 2) {
    r.applicable_case = KernelCase::Q5N2;
    r.kappa_bound = 8;
    // dim of the (2,0) kernel <= dim \wedge^2 C^5 - (2q-3) = 10 - 7
    r.ker20_bound = 3;
    r.total_bound = *r.kappa_bound + 2 * *r.ker20_bound;  // 14
    r.im_phi_lower = full - *r.total_bound;               // 31
    r.b2_lower = r.im_phi_lower;
    r.note = status.section3_parity_passed ? "kappa bound verified in this run"
                                           : "kappa bound cited (parity computation not run)";
    return r;
  }
  r.applicable_case = KernelCase::OutOfTable;
  DEntry d = d_bound(q, 2 * n, status);
  if (d.upper) {
    r.kappa_bound = *d.upper;
    r.note = "kappa bounded by the rank table entry d(q, 2n)";
  } else {
    r.note = "no bound known";
  }
  return r;
}

Pi1Bound pi1_bound(unsigned n, unsigned q, const VerificationStatus& status) {
  Pi1Bound p;
  p.n = n;
  p.q = q;
  p.general_position_bound = 4l * q - 7;
  KernelBoundReport k = kernel_bound(n, q, status);
  p.b2_lower = k.b2_lower;
  if (k.im_phi_lower) p.rho_minus_gamma_lower = *k.im_phi_lower - 2l * q;
  if (n == 2 && k.b2_lower) p.c2_lower = 2 - 4l * q + *k.b2_lower;
  if (n == 2 && q == 5) {
    // The source also asserts rho-gamma >= b2 >= 31 here, which exceeds the
    // value its own inequality yields (31 - 2q = 21); report both.
    p.stated_rho_minus_gamma_lower = p.b2_lower;
    p.discrepancy_flag = true;
    p.note = "stated bound (31) and formula bound (dim Im - 2q = 21) differ; both reported";
  }
  return p;
}

SurfaceReport noether_window(unsigned q, long p_g, long k2_prior_lower, long c2_lower) {
  SurfaceReport s;
  s.q = q;
  s.p_g = p_g;
  s.chi_hol = p_g - static_cast<long>(q) + 1;
  s.noether_sum = 12 * s.chi_hol;
  s.c2_lower = c2_lower;
  s.k2_window_lo = k2_prior_lower;
  s.k2_window_hi = s.noether_sum - c2_lower;
  s.miyaoka_bound = 9 * s.chi_hol;
  s.consistent = s.k2_window_lo <= s.k2_window_hi;
  if (!s.consistent) s.note = "empty window: the prior lower bound exceeds the Noether budget";
  return s;
}

}  // namespace cupkernel
