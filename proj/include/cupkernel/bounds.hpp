#pragma once

// Formula-level calculator for the cup-product kernel bounds and their
// numeric consequences: the d_{q,m} table with provenance, kernel dimension
// bounds by case, fundamental-group and Chern-number estimates, and the
// Noether-formula window for surfaces.

#include <optional>
#include <string>
#include <vector>

namespace cupkernel {

enum class Provenance { TrivialZero, AdamsFormula, Section3Parity, ExplicitFamily, Unknown };

std::string provenance_name(Provenance p);

/// Which computations were verified in this process; bounds relying on them
/// are marked "verified" instead of "cited".
struct VerificationStatus {
  bool section3_parity_passed = false;
  bool explicit_family_passed = false;
};

struct DEntry {
  unsigned q = 0, m = 0;
  std::optional<long> lower;
  std::optional<long> upper;
  Provenance provenance = Provenance::Unknown;
  bool verified_this_run = false;  // meaningful for the q=5,m=4 row
  std::string note;
};

DEntry d_bound(unsigned q, unsigned m, const VerificationStatus& status = {});

enum class KernelCase { Injective, QEquals2N, Q5N2, OutOfTable };

std::string kernel_case_name(KernelCase c);

struct KernelBoundReport {
  unsigned n = 0, q = 0;
  unsigned long b = 0, c = 0;  // from q = 2^c(2b+1) when applicable
  KernelCase applicable_case = KernelCase::OutOfTable;
  std::optional<long> kappa_bound;   // dim ker of the (1,1) piece
  std::optional<long> ker20_bound;   // dim ker of the (2,0) piece
  std::optional<long> total_bound;   // dim ker of the full cup product
  std::optional<long> im_phi_lower;  // q(2q-1) - total
  std::optional<long> b2_lower;
  std::string note;
};

KernelBoundReport kernel_bound(unsigned n, unsigned q, const VerificationStatus& status = {});

struct Pi1Bound {
  unsigned n = 0, q = 0;
  std::optional<long> rho_minus_gamma_lower;         // dim Im(phi) - 2q
  std::optional<long> stated_rho_minus_gamma_lower;  //  b2 value quoted alongside, when it differs
  bool discrepancy_flag = false;
  std::optional<long> b2_lower;
  std::optional<long> c2_lower;        // surfaces only (n = 2)
  long general_position_bound = 0;     // 4q - 7, for comparison
  std::string note;
};

Pi1Bound pi1_bound(unsigned n, unsigned q, const VerificationStatus& status = {});

struct SurfaceReport {
  unsigned q = 0;
  long p_g = 0;
  long chi_hol = 0;      // p_g - q + 1
  long noether_sum = 0;  // K^2 + c2 = 12 chi
  long c2_lower = 0;
  long k2_window_lo = 0;
  long k2_window_hi = 0;
  long miyaoka_bound = 0;  // 9 chi
  bool consistent = true;
  std::string note;
};

SurfaceReport noether_window(unsigned q, long p_g, long k2_prior_lower, long c2_lower);

}  // namespace cupkernel
