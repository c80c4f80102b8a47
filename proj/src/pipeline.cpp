#include "cupkernel/pipeline.hpp"

#include <stdexcept>

namespace cupkernel {

namespace {

using PolyF2 = GradedPolynomial<F2>;

PolyF2 var(const PolyRingPtr& r, const char* name, uint32_t power = 1) {
  return PolyF2::variable(r, name, power);
}

}  // namespace

std::vector<unsigned> betti_gr35() {
  std::vector<unsigned> b;
  for (unsigned d = 0; d <= 6; ++d)
    b.push_back(static_cast<unsigned>(partitions_in_box(d, 3, 2).size()));
  return b;
}

Section3Context Section3Context::build(unsigned truncation) {
  PolyRingPtr cvars = PolyRing::make({{"c1", 1}, {"c2", 2}, {"c3", 3}});

  PolyF2 total_s = PolyF2::one(cvars) + var(cvars, "c1") + var(cvars, "c2") + var(cvars, "c3");
  BundleClass<F2> taut("S", 3, total_s);

  // Relations of the presentation: the Segre classes of S in degrees 3..5
  // (equivalently the Chern classes of the quotient bundle beyond its rank).
  PolyF2 seg = total_s.inverse_graded(truncation);
  std::vector<PolyF2> rels = {seg.graded_part(3), seg.graded_part(4), seg.graded_part(5)};
  auto gr = std::make_shared<const QuotientRing<F2>>(cvars, rels, truncation);

  BundleClass<F2> taut_dual = dual(taut);
  BundleClass<F2> quotient("Q", 2, PolyF2::one(cvars) + seg.graded_part(1) + seg.graded_part(2));
  BundleClass<F2> taut5 = whitney_power(taut, 5, truncation);
  taut5.name = "S5";

  BundleClass<F2> tangent = tensor(taut_dual, quotient, truncation);
  tangent.name = "TG";

  // Alternative route through 0 -> S (x) S~ -> S~^5 -> T_G -> 0.
  BundleClass<F2> endo = tensor(taut, taut_dual, truncation);
  BundleClass<F2> dual5 = whitney_power(taut_dual, 5, truncation);
  BundleClass<F2> tangent_seq(
      "TG-seq", 6, dual5.total.times(endo.total.inverse_graded(truncation), truncation));

  ProjectiveBundleContext<F2> ps5 = projective_bundle_ring(*gr, taut5, truncation);

  return Section3Context{truncation, cvars,   gr,          taut, taut_dual, quotient,
                         taut5,      tangent, tangent_seq, ps5,  GrassmannianContext{3, 5}};
}

namespace {

// c_t of the vertical tangent bundle of P(S^5) -> G as a polynomial in the
// base classes and h: sum_j c_j(S^5) (1+h)^{15-j}.
PolyF2 vertical_total(const Section3Context& ctx, unsigned trunc) {
  const auto& total = ctx.ps5.total_ring;
  PolyF2 one_plus_h = PolyF2::one(total) + PolyF2::variable(total, ctx.ps5.h_index);
  PolyF2 acc(total);
  for (unsigned j = 0; j <= 15; ++j) {
    PolyF2 cj = ctx.taut5.chern(j).lifted(total);
    if (cj.is_zero()) continue;
    acc = acc + cj.times(one_plus_h.pow(15 - j, trunc), trunc);
  }
  return acc;
}

PolyF2 t_ps5_total(const Section3Context& ctx, unsigned trunc) {
  PolyF2 tg = ctx.tangent.total.lifted(ctx.ps5.total_ring);
  return tg.times(vertical_total(ctx, trunc), trunc);
}

}  // namespace

GradedPolynomial<F2> compute_e4_raw(const Section3Context& ctx, unsigned mul_truncation) {
  const unsigned trunc = mul_truncation ? mul_truncation : ctx.truncation;
  const auto& total = ctx.ps5.total_ring;
  PolyF2 one_plus_h = PolyF2::one(total) + PolyF2::variable(total, ctx.ps5.h_index);
  PolyF2 inv16 = one_plus_h.pow(16, trunc).inverse_graded(trunc);
  PolyF2 normalized = t_ps5_total(ctx, trunc).times(inv16, trunc);
  return normalized.graded_part(4);
}

GradedPolynomial<F2> compute_e4(const Section3Context& ctx, unsigned mul_truncation) {
  return ctx.ps5.ring->normal_form(compute_e4_raw(ctx, mul_truncation));
}

EulerParity euler_parity(const Section3Context& ctx) {
  EulerParity out{false, PolyF2::zero(ctx.ps5.total_ring), {}};
  PolyF2 e4 = compute_e4(ctx);
  PolyF2 h16 = ctx.ps5.h_power(16);
  PolyF2 top = ctx.ps5.ring->normal_form(h16 * e4);
  out.top_value = top;
  out.odd = !top.is_zero();

  const auto& basis20 = ctx.ps5.ring->basis_of_degree(20);
  for (const auto& [m, c] : e4.terms()) {
    PolyF2 term = PolyF2::term(ctx.ps5.total_ring, m, c);
    PolyF2 reduced = ctx.ps5.ring->normal_form(h16 * term);
    bool survives = !reduced.is_zero();
    if (survives && basis20.size() == 1 && !(reduced == PolyF2::term(ctx.ps5.total_ring, basis20[0], F2::one())))
      throw std::logic_error("euler_parity: surviving term is not the top basis monomial");
    out.term_survival.emplace_back(ctx.ps5.total_ring->monomial_str(m), survives);
  }
  return out;
}

long degree_v53(const Section3Context& ctx) {
  // Integer route: push h^20 down to the sixth Segre class of S^5 and
  // integrate in the Schubert ring.
  PolyRingPtr cvars = PolyRing::make({{"c1", 1}, {"c2", 2}, {"c3", 3}});
  using PolyZ = GradedPolynomial<ZZ>;
  PolyZ total_s = PolyZ::one(cvars) + PolyZ::variable(cvars, "c1") +
                  PolyZ::variable(cvars, "c2") + PolyZ::variable(cvars, "c3");
  BundleClass<ZZ> taut("S", 3, total_s);
  BundleClass<ZZ> taut5 = whitney_power(taut, 5, ctx.truncation);

  PolyRingPtr ext = cvars->extended({"h", 1});
  PolyZ h20 = PolyZ::variable(ext, "h", 20);
  PolyZ pushed = pushforward_formal(taut5, h20, cvars, *ext->index_of("h"), ctx.truncation);
  ZZ value = integrate(to_schubert(pushed, ctx.schubert_ctx));
  return static_cast<long>(value.raw().get_si());
}

namespace {

std::vector<SchubertElement<F2>> zero_slots(const Section3Context& ctx) {
  return std::vector<SchubertElement<F2>>(15, SchubertElement<F2>::zero(ctx.schubert_ctx));
}

// h^15 = sum_{j>=1} c_j(S^5) h^{15-j} with Schubert-class coefficients.
std::vector<SchubertElement<F2>> chern_s5_schubert(const Section3Context& ctx) {
  SchubertElement<F2> c = total_chern_of_tautological<F2>(ctx.schubert_ctx);
  SchubertElement<F2> c5 = SchubertElement<F2>::unit(ctx.schubert_ctx);
  for (int i = 0; i < 5; ++i) c5 = multiply(c5, c);
  std::vector<SchubertElement<F2>> parts;
  for (unsigned j = 0; j <= 6; ++j) parts.push_back(c5.homogeneous_part(j));
  return parts;
}

}  // namespace

std::vector<SchubertElement<F2>> ps5_module_reduce(const Section3Context& ctx,
                                                   const GradedPolynomial<F2>& cls) {
  const auto parts = chern_s5_schubert(ctx);
  auto mul_h = [&](const std::vector<SchubertElement<F2>>& v) {
    auto out = zero_slots(ctx);
    for (unsigned k = 14; k >= 1; --k) out[k] = out[k] + v[k - 1];
    if (!v[14].is_zero())
      for (unsigned j = 1; j <= 6; ++j)  // classes vanish beyond the box
        out[15 - j] = out[15 - j] + multiply(v[14], parts[j]);
    return out;
  };

  auto acc = zero_slots(ctx);
  const unsigned h_index = ctx.ps5.h_index;
  for (const auto& [m, c] : cls.terms()) {
    // split the monomial into base part and h power
    std::vector<uint32_t> base_exps;
    for (unsigned i = 0; i < ctx.gr_vars->nvars(); ++i) base_exps.push_back(m.exponent(i));
    PolyF2 basepoly = PolyF2::term(ctx.gr_vars, ctx.gr_vars->monomial(std::move(base_exps)), c);
    auto slots = zero_slots(ctx);
    slots[0] = to_schubert(basepoly, ctx.schubert_ctx);
    for (uint32_t k = 0; k < m.exponent(h_index); ++k) slots = mul_h(slots);
    for (unsigned k = 0; k < 15; ++k) acc[k] = acc[k] + slots[k];
  }
  return acc;
}

std::vector<SchubertElement<F2>> ps5_module_of_normal_form(const Section3Context& ctx,
                                                           const GradedPolynomial<F2>& nf) {
  auto acc = zero_slots(ctx);
  const unsigned h_index = ctx.ps5.h_index;
  for (const auto& [m, c] : nf.terms()) {
    uint32_t k = m.exponent(h_index);
    if (k > 14) throw std::invalid_argument("ps5_module_of_normal_form: h power above the fiber");
    std::vector<uint32_t> base_exps;
    for (unsigned i = 0; i < ctx.gr_vars->nvars(); ++i) base_exps.push_back(m.exponent(i));
    PolyF2 basepoly = PolyF2::term(ctx.gr_vars, ctx.gr_vars->monomial(std::move(base_exps)), c);
    acc[k] = acc[k] + to_schubert(basepoly, ctx.schubert_ctx);
  }
  return acc;
}

Section3Report d54_report(const Section3Context& ctx, unsigned long family_trials, uint64_t seed) {
  Section3Report r;

  PolyF2 s5_raw = ctx.taut5.total.truncated(6);
  r.chern_s5_raw = s5_raw.str();
  r.chern_s5_reduced = ctx.gr->normal_form(s5_raw).str();

  PolyF2 tg_raw = ctx.tangent.total.truncated(6);
  r.chern_tg_raw = tg_raw.str();
  r.chern_tg_reduced = ctx.gr->normal_form(tg_raw).str();

  PolyF2 tps5_raw = t_ps5_total(ctx, ctx.truncation).truncated(6);
  r.chern_t_ps5_raw = tps5_raw.str();
  r.chern_t_ps5_reduced = ctx.ps5.ring->normal_form(tps5_raw).str();

  r.e4_raw = compute_e4_raw(ctx).str();
  r.e4_reduced = compute_e4(ctx).str();

  EulerParity ep = euler_parity(ctx);
  r.euler_parity_odd = ep.odd;
  r.top_class_value = ep.top_value.str();
  r.term_survival = ep.term_survival;

  r.degree_v53 = degree_v53(ctx);
  r.betti_gr35 = betti_gr35();

  FamilyCheck fam = verify_family(family_trials, seed);
  r.family_passed = fam.passed();
  r.family_trials = fam.trials;
  r.family_seed = fam.seed;
  r.family_rank4 = fam.rank4_count;
  r.family_rank5 = fam.rank5_count;
  r.det_a3_formula = fam.det_a3_formula;

  r.d54_lower = r.family_passed ? 7 : 0;
  r.d54_upper = ep.odd ? 8 : 0;
  if (!ep.odd || !r.family_passed)
    throw std::logic_error("d54_report: a backing verification failed");
  return r;
}

}  // namespace cupkernel
