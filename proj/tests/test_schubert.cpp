#include "cupkernel/schubert.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cupkernel;

namespace {

const GrassmannianContext g35{3, 5};

SchubertElement<ZZ> s(std::initializer_list<unsigned> parts) {
  return SchubertElement<ZZ>::single(g35, Partition(parts));
}

SchubertElement<ZZ> random_element(SplitMix64& rng) {
  SchubertElement<ZZ> e(g35);
  for (int t = 0; t < 4; ++t) {
    unsigned size = static_cast<unsigned>(rng.next_below(7));
    auto parts = partitions_in_box(size, 3, 2);
    if (parts.empty()) continue;
    e.add_term(parts[rng.next_below(parts.size())], ZZ(rng.next_int(-5, 5)));
  }
  return e;
}

}  // namespace

TEST_CASE("partitions: normalization, box membership, complement convention") {
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition({2, 2, 2}).fits_in_box(3, 2));
  CHECK(!Partition({3}).fits_in_box(3, 2));
  // complement is the reversed box complement
  CHECK(Partition({2, 1}).complement(3, 2) == Partition({2, 1, 0}));
  CHECK(Partition({2}).complement(3, 2) == Partition({2, 2}));
  CHECK(Partition{}.complement(3, 2) == Partition({2, 2, 2}));
}

TEST_CASE("partition counts in the box give the Betti numbers") {
  std::vector<size_t> counts;
  for (unsigned d = 0; d <= 6; ++d) counts.push_back(partitions_in_box(d, 3, 2).size());
  CHECK(counts == std::vector<size_t>{1, 1, 2, 2, 2, 1, 1});
  // the transposed box has the same profile
  for (unsigned d = 0; d <= 6; ++d)
    CHECK(partitions_in_box(d, 2, 3).size() == counts[d]);
}

TEST_CASE("Pieri rule: base case, box saturation, shared-column exclusion") {
  auto s1s1 = pieri_multiply(s({1}), 1);
  CHECK(s1s1 == s({2}) + s({1, 1}));
  CHECK(pieri_multiply(s({2, 2, 2}), 1).is_zero());
  // adding a horizontal 2-strip to (2,1,1): both candidates need two boxes
  // in one column, so the product is zero
  CHECK(pieri_multiply(s({2, 1, 1}), 2).is_zero());
  // p = 0 is the identity
  CHECK(pieri_multiply(s({2, 1}), 0) == s({2, 1}));
}

TEST_CASE("general multiplication agrees with Pieri-only evaluation") {
  // s[1,1] = s[1]^2 - s[2], so s[2]*s[1,1] can be computed two ways
  auto via_pieri = pieri_multiply(pieri_multiply(s({2}), 1), 1) - pieri_multiply(s({2}), 2);
  CHECK(multiply(s({2}), s({1, 1})) == via_pieri);
  CHECK(multiply(s({2}), s({1, 1})) == s({2, 1, 1}));

  CHECK(multiply(s({2}), s({2})) == s({2, 2}));

  SplitMix64 rng(21);
  for (int i = 0; i < 10; ++i) {
    auto a = random_element(rng);
    CHECK(multiply(SchubertElement<ZZ>::unit(g35), a) == a);
    // agreement with iterated Pieri when the right factor is one row
    for (unsigned p = 0; p <= 2; ++p)
      CHECK(multiply(a, SchubertElement<ZZ>::single(g35, Partition::row(p))) ==
            pieri_multiply(a, p));
  }
}

TEST_CASE("multiplication is symmetric") {
  SplitMix64 rng(22);
  for (int i = 0; i < 8; ++i) {
    auto a = random_element(rng);
    auto b = random_element(rng);
    CHECK(multiply(a, b) == multiply(b, a));
  }
}

TEST_CASE("integration evaluates against the fundamental class") {
  // frozen from the hook-length count of standard tableaux of the 3x2 box
  SchubertElement<ZZ> p = s({1});
  SchubertElement<ZZ> acc = SchubertElement<ZZ>::unit(g35);
  for (int i = 0; i < 6; ++i) acc = multiply(acc, p);
  CHECK(integrate(acc) == ZZ(5));

  // (2,1) is self-complementary in the box
  CHECK(integrate(multiply(s({2, 1}), s({2, 1}))) == ZZ(1));
  CHECK(integrate(SchubertElement<ZZ>::unit(g35)) == ZZ(0));
}

TEST_CASE("Poincare duality on the 3x2 and 2x3 boxes") {
  for (GrassmannianContext ctx : {GrassmannianContext{3, 5}, GrassmannianContext{2, 5}}) {
    for (unsigned d = 0; d <= ctx.dimension(); ++d) {
      for (const auto& la : partitions_in_box(d, ctx.rows(), ctx.cols())) {
        auto dual = la.complement(ctx.rows(), ctx.cols());
        for (const auto& mu : partitions_in_box(ctx.dimension() - d, ctx.rows(), ctx.cols())) {
          ZZ want = (mu == dual) ? ZZ(1) : ZZ(0);
          CHECK(integrate(multiply(SchubertElement<ZZ>::single(ctx, la),
                                   SchubertElement<ZZ>::single(ctx, mu))) == want);
        }
      }
    }
  }
}

TEST_CASE("Chern classes of the tautological and quotient bundles") {
  CHECK(chern_of_tautological<ZZ>(g35, 1) == -s({1}));
  CHECK(chern_of_tautological<ZZ>(g35, 0) == SchubertElement<ZZ>::unit(g35));
  CHECK(chern_of_tautological<ZZ>(g35, 3) == -s({1, 1, 1}));
  CHECK_THROWS_AS(chern_of_tautological<ZZ>(g35, 4), std::out_of_range);
  CHECK(chern_of_quotient<ZZ>(g35, 2) == s({2}));
  CHECK(chern_of_quotient<ZZ>(g35, 3).is_zero());

  // c(S) c(Q) = 1 degree by degree
  auto prod = multiply(total_chern_of_tautological<ZZ>(g35), total_chern_of_quotient<ZZ>(g35));
  CHECK(prod == SchubertElement<ZZ>::unit(g35));
}

TEST_CASE("degree of the rank-3 locus: quintuple quotient-class expansion") {
  // [c(Q)^5]_6 integrates to 50; the frozen expansion is
  // 10 s[2]^3 + 30 s[1]^2 s[2]^2 + 5 s[1]^4 s[2] with integrals 1, 1, 2.
  auto cq = total_chern_of_quotient<ZZ>(g35);
  SchubertElement<ZZ> pw = SchubertElement<ZZ>::unit(g35);
  for (int i = 0; i < 5; ++i) pw = multiply(pw, cq);
  CHECK(integrate(pw.homogeneous_part(6)) == ZZ(50));

  auto power = [&](std::initializer_list<unsigned> base, int k) {
    SchubertElement<ZZ> acc = SchubertElement<ZZ>::unit(g35);
    for (int i = 0; i < k; ++i) acc = multiply(acc, s(base));
    return acc;
  };
  CHECK(integrate(power({2}, 3)) == ZZ(1));
  CHECK(integrate(multiply(power({1}, 2), power({2}, 2))) == ZZ(1));
  CHECK(integrate(multiply(power({1}, 4), power({2}, 1))) == ZZ(2));
  CHECK(10 * 1 + 30 * 1 + 5 * 2 == 50);
}

TEST_CASE("polynomial-to-Schubert ring map kills the presentation relations") {
  const auto& ctx = cupkernel::testing::section3();
  // over the integers the Segre parts map to quotient classes beyond the rank
  auto r = ctx.gr_vars;
  using PolyZ = GradedPolynomial<ZZ>;
  PolyZ total = PolyZ::one(r) + PolyZ::variable(r, "c1") + PolyZ::variable(r, "c2") +
                PolyZ::variable(r, "c3");
  auto seg = total.inverse_graded(6);
  for (unsigned j : {3u, 4u, 5u}) {
    CHECK(to_schubert(seg.graded_part(j), g35).is_zero());
  }
  // mod 2 the displayed relation c1^3 + c3 maps to zero as well
  auto relf2 = cupkernel::testing::poly_of<F2>(r, "c1^3 + c3");
  CHECK(to_schubert(relf2, g35).is_zero());
}

TEST_CASE("canonical text form of Schubert elements") {
  CHECK((s({2, 1}) + s({1, 1, 1}).scaled(ZZ(3))).str() == "3*s[1,1,1] + s[2,1]");
  CHECK((-s({1})).str() == "-s[1]");
  CHECK(SchubertElement<ZZ>::unit(g35).str() == "s[]");
  CHECK(SchubertElement<ZZ>::zero(g35).str() == "0");
}
