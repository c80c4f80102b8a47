#include "cupkernel/bounds.hpp"

#include "doctest.h"
#include "cupkernel/numeric.hpp"

using namespace cupkernel;

TEST_CASE("rank table: trivial zero, invertible case, and the q=5 m=4 row") {
  auto e = d_bound(3, 4);
  CHECK(e.lower == 0);
  CHECK(e.upper == 0);
  CHECK(e.provenance == Provenance::TrivialZero);

  e = d_bound(4, 4);
  CHECK(e.lower == 5);  // c = 2
  CHECK(e.upper == 5);
  CHECK(e.provenance == Provenance::AdamsFormula);

  e = d_bound(5, 4);
  CHECK(e.lower == 7);
  CHECK(e.upper == 8);
  CHECK(e.provenance == Provenance::Section3Parity);
  CHECK(!e.verified_this_run);

  VerificationStatus st{true, true};
  CHECK(d_bound(5, 4, st).verified_this_run);

  CHECK(d_bound(5, 5).upper == 1);  // q = 5 has c = 0
  CHECK(d_bound(7, 7).upper == 1);
  CHECK(d_bound(8, 8).upper == 7);  // c = 3
  CHECK(!d_bound(9, 3).upper.has_value());
  CHECK(d_bound(9, 3).lower == 1);
}

TEST_CASE("rank table upper values are non-increasing in m where known") {
  for (unsigned q = 1; q <= 16; ++q) {
    std::optional<long> prev;
    for (unsigned m = 1; m <= q + 3; ++m) {
      auto e = d_bound(q, m);
      if (e.upper && prev) CHECK(*e.upper <= *prev);
      if (e.upper) prev = e.upper;
    }
  }
}

TEST_CASE("kernel bound: injectivity below the threshold, exhaustively") {
  for (unsigned n = 1; n <= 50; ++n)
    for (unsigned q = 0; q <= 2 * n - 1; ++q) {
      auto r = kernel_bound(n, q);
      CHECK(r.applicable_case == KernelCase::Injective);
      CHECK(r.total_bound == 0);
      CHECK(r.b2_lower == static_cast<long>(q) * (2l * q - 1));
    }
}

TEST_CASE("kernel bound: doubled case gives 2c+3 and the surface numbers") {
  auto r = kernel_bound(2, 4);
  CHECK(r.applicable_case == KernelCase::QEquals2N);
  CHECK(r.c == 2);
  CHECK(r.kappa_bound == 5);
  CHECK(r.ker20_bound == 1);
  CHECK(r.total_bound == 7);
  CHECK(r.b2_lower == 21);

  for (unsigned q = 2; q <= 128; q += 2) {
    unsigned n = q / 2;
    auto k = kernel_bound(n, q);
    CHECK(k.applicable_case == KernelCase::QEquals2N);
    TwoAdic t = two_adic(q);
    CHECK(k.total_bound == static_cast<long>(2 * t.c + 3));
    CHECK(*k.total_bound == *k.kappa_bound + 2 * *k.ker20_bound);
    CHECK(*k.b2_lower == static_cast<long>(q) * (2l * q - 1) - *k.total_bound);
  }
}

TEST_CASE("kernel bound: the five-parameter surface case") {
  auto r = kernel_bound(2, 5);
  CHECK(r.applicable_case == KernelCase::Q5N2);
  CHECK(r.kappa_bound == 8);
  CHECK(r.ker20_bound == 3);
  CHECK(r.total_bound == 14);
  CHECK(r.b2_lower == 31);
  CHECK(*r.b2_lower == 5 * 9 - *r.total_bound);
}

TEST_CASE("kernel bound: out of table reports no bound") {
  auto r = kernel_bound(2, 7);
  CHECK(r.applicable_case == KernelCase::OutOfTable);
  CHECK(!r.total_bound.has_value());
  CHECK(r.note == "no bound known");
}

TEST_CASE("fundamental group estimates") {
  auto p = pi1_bound(2, 4);
  CHECK(p.rho_minus_gamma_lower == 13);  // q(2q-3) - 2c - 3 = 13
  CHECK(p.c2_lower == 7);
  CHECK(!p.discrepancy_flag);
  CHECK(p.general_position_bound == 9);

  auto p5 = pi1_bound(2, 5);
  CHECK(p5.b2_lower == 31);
  CHECK(p5.c2_lower == 13);
  CHECK(p5.rho_minus_gamma_lower == 21);         // 31 - 2q
  CHECK(p5.stated_rho_minus_gamma_lower == 31);  // quoted alongside
  CHECK(p5.discrepancy_flag);

  // injective range: everything of the exterior square survives
  auto pi = pi1_bound(3, 5);
  CHECK(pi.rho_minus_gamma_lower == 5 * 9 - 10);
}

TEST_CASE("Noether window") {
  auto s = noether_window(4, 5, 16, 7);
  CHECK(s.chi_hol == 2);
  CHECK(s.noether_sum == 24);
  CHECK(s.k2_window_lo == 16);
  CHECK(s.k2_window_hi == 17);
  CHECK(s.miyaoka_bound == 18);
  CHECK(s.consistent);

  auto t = noether_window(4, 5, 16, 8);
  CHECK(t.k2_window_lo == 16);
  CHECK(t.k2_window_hi == 16);

  auto u = noether_window(4, 5, 0, 0);
  CHECK(u.k2_window_lo == 0);
  CHECK(u.k2_window_hi == 24);

  auto bad = noether_window(4, 5, 20, 7);
  CHECK(!bad.consistent);
}
