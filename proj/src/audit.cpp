#include <algorithm>

#include "critlab/error.hpp"
#include "critlab/lemma_lab.hpp"

namespace critlab {

Rational component_weight(const Graph& g, const VertexSet& x, const VertexSet& d) {
  VertexSet xs = x, ds = d;
  normalize(xs);
  normalize(ds);
  const auto comps = components(g, xs);
  if (std::find(comps.begin(), comps.end(), ds) == comps.end()) {
    throw UsageError("D is not a component of G - X");
  }
  Rational sum{0};
  for (Vertex v : neighborhood(g, ds)) {
    sum += Rational(g.degree(v) - 2, g.degree(v));
  }
  return sum;
}

ProofArithmetic proof_arithmetic(int k) {
  ProofArithmetic p;
  p.k = k;
  p.case1_lower = static_cast<long long>(k) * (k - 4) + 2;
  p.target = 2LL * k - 6;
  p.case2_three = 2LL * (k - 3);
  p.case2_five = (k - 3) + (k - 2);
  // Case 1 chains l > k(k-3)-k+2 = k(k-4)+2 >= 2k-6; Case 2 ends at 2(k-3)
  // or 2k-5 divalent vertices, both at least 2k-6.
  const long long via_case1 = static_cast<long long>(k) * (k - 3) - k + 2;
  // k = 3 needs no argument: the bound 2k-6 is 0.
  p.holds = k == 3 || (k > 3 && via_case1 == p.case1_lower && p.case1_lower >= p.target &&
            p.case2_three >= p.target && p.case2_five >= p.target);
  return p;
}

bool AuditVerdict::conclusive() const {
  if (criticality != Verdict::yes) return false;
  if (factor_status == SearchStatus::found) return true;
  return factor_status == SearchStatus::unsatisfiable && barrier_status == SearchStatus::found;
}

AuditVerdict theorem1_audit(const Graph& g, const AuditOptions& opts) {
  AuditVerdict v;
  v.k = g.max_degree();
  if (v.k < 3) throw UsageError("the theorem is stated for k >= 3");
  std::optional<CriticalityReport> own;
  const CriticalityReport* rep = opts.report;
  if (!rep) {
    CriticalityOptions co;
    co.budget = opts.color_budget;
    co.stop_at_first_noncritical = true;
    own = is_k_critical(g, co);
    rep = &*own;
  }
  v.criticality = rep->k_critical;
  if (v.criticality == Verdict::no) throw UsageError("input is not k-critical");
  v.divalent_count = divalent_count(g);
  v.hypothesis_met = v.divalent_count <= 2 * v.k - 6;
  v.arithmetic = proof_arithmetic(v.k);
  if (v.criticality == Verdict::unknown) return v;

  EvenFactorResult ef = find_even_factor(g, opts.factor_budget);
  v.factor_status = ef.status;
  v.even_factor = std::move(ef.factor);
  if (ef.status != SearchStatus::unsatisfiable) return v;

  BarrierResult br = find_barrier(g, opts.barrier_budget);
  v.barrier_status = br.status;
  if (br.status == SearchStatus::unsatisfiable) v.theorem2_consistent = false;
  if (br.barrier) {
    v.barrier = normalize_barrier(g, br.barrier->x);
    const Barrier& b = v.barrier->barrier;
    for (const VertexSet& d : b.components) {
      v.g_values.push_back(component_weight(g, b.x, d));
      v.g_sum += v.g_values.back();
    }
    v.pivot_holds = v.g_sum < Rational(static_cast<long long>(b.components.size()));
  }
  v.falsification = v.hypothesis_met;
  return v;
}

}  // namespace critlab
