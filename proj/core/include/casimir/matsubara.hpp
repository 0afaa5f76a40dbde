#pragma once

#include <functional>

namespace casimir {

/// Tolerances and limits for Matsubara sums and k-quadratures.
struct SummationPolicy {
  double rel_tol = 1e-8;             // tail bound relative to the running sum
  double abs_floor = 0.0;            // absolute tail bound accepted regardless (result units)
  int max_matsubara = 2'000'000;     // hard cap on the number of terms
  double quadrature_rel_tol = 1e-10; // per-term k-integral tolerance
  double truncation_safety = 10.0;   // S in n_max = ceil(S hbar c / (4 pi d kB T))
  double derivative_rel_tol = 1e-5;  // target for finite-difference derivatives (entropy)
  unsigned threads = 1;

  void validate() const;
};

/// Contribution of one Matsubara term, split by polarization.
struct TermPair {
  double tm = 0.0;
  double te = 0.0;
};

/// Outcome of a Matsubara sum in physical units. value = tm + te; derived
/// quantities without a polarization split (entropy) set tm and te to NaN.
struct SeriesResult {
  double value = 0.0;
  double tm = 0.0;
  double te = 0.0;
  double tail_bound = 0.0; // bound on |truncated remainder|, same units as value
  int terms = 0;           // Matsubara terms summed (n = 0 .. terms-1)
};

/// Sums prefactor * sum'_n term(n) (n = 0 weighted by 1/2) until the
/// geometric tail bound of the combined TM+TE terms drops below
/// max(rel_tol |sum|, abs_floor). Terms are evaluated in blocks whose layout
/// does not depend on policy.threads, and reduced pairwise, so results are
/// bit-identical for any worker count.
/// decay_ratio is a known asymptotic ratio of successive terms; the tail
/// bound never assumes faster decay than that.
/// Throws ConvergenceError when max_matsubara is reached first.
SeriesResult sum_matsubara(const std::function<TermPair(int)>& term, int initial_terms,
                           double prefactor, const SummationPolicy& policy,
                           double decay_ratio = 0.0);

/// exp(-4 pi kB T d / (hbar c)): the e^{-2 xi_n d / c} envelope of plate terms.
double matsubara_decay_ratio(double gap, double T);

/// Default initial truncation ceil(S hbar c / (4 pi d kB T)), at least 3.
int initial_matsubara_terms(double gap, double T, const SummationPolicy& policy);

} // namespace casimir
