#include "casimir/matsubara.hpp"

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace casimir {

namespace {

constexpr int kBlock = 32;

double magnitude(const TermPair& t) { return std::abs(t.tm) + std::abs(t.te); }

// Geometric bound on the remainder from the decay ratio of the last terms;
// infinite while the terms are not yet decaying. The ratio can dip below its
// asymptote and creep back (n^a q^n with a < 0, or a falling permittivity),
// so it is floored at the known envelope and a rising ratio
// r_n = q (1 + a/n) is extrapolated, q = r_n + (n - 1) (r_n - r_{n-1}).
double tail_estimate(const std::vector<TermPair>& terms, double floor_ratio) {
  const std::size_t n = terms.size();
  if (n < 3) return std::numeric_limits<double>::infinity();
  const double last = magnitude(terms[n - 1]);
  const double prev = magnitude(terms[n - 2]);
  const double prev2 = magnitude(terms[n - 3]);
  if (last == 0.0) return 0.0;
  if (prev == 0.0 || prev2 == 0.0) return std::numeric_limits<double>::infinity();
  double ratio = last / prev;
  const double rise = ratio - prev / prev2;
  if (rise > 0.0) ratio += static_cast<double>(n - 2) * rise;
  ratio = std::max(ratio, floor_ratio);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  return last * ratio / (1.0 - ratio);
}

} // namespace

void SummationPolicy::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw ParameterError("policy: rel_tol must lie in (0, 1)");
  if (!(abs_floor >= 0.0)) throw ParameterError("policy: abs_floor must be >= 0");
  if (max_matsubara < 1) throw ParameterError("policy: max_matsubara must be >= 1");
  if (!(quadrature_rel_tol > 0.0 && quadrature_rel_tol < 1.0))
    throw ParameterError("policy: quadrature_rel_tol must lie in (0, 1)");
  if (!(truncation_safety > 0.0)) throw ParameterError("policy: truncation_safety must be > 0");
  if (!(derivative_rel_tol > 0.0 && derivative_rel_tol < 1.0))
    throw ParameterError("policy: derivative_rel_tol must lie in (0, 1)");
}

double matsubara_decay_ratio(double gap, double T) {
  using namespace constants;
  return std::exp(-4.0 * pi * boltzmann * T * gap / (hbar * speed_of_light));
}

int initial_matsubara_terms(double gap, double T, const SummationPolicy& policy) {
  using namespace constants;
  const double n = policy.truncation_safety * hbar * speed_of_light /
                   (4.0 * pi * gap * boltzmann * T);
  const double capped = std::min(std::ceil(n), static_cast<double>(policy.max_matsubara));
  return std::max(3, static_cast<int>(capped));
}

SeriesResult sum_matsubara(const std::function<TermPair(int)>& term, int initial_terms,
                           double prefactor, const SummationPolicy& policy,
                           double decay_ratio) {
  policy.validate();
  std::vector<TermPair> terms;
  int target = std::min(std::max(initial_terms, 3), policy.max_matsubara);

  auto extend_to = [&](int upto) {
    const int first = static_cast<int>(terms.size());
    // blocks of fixed size keep the evaluation layout worker-independent
    const int rounded = std::min(((upto + kBlock - 1) / kBlock) * kBlock, policy.max_matsubara);
    terms.resize(static_cast<std::size_t>(rounded));
    parallel_for(static_cast<std::size_t>(rounded - first), policy.threads, [&](std::size_t i) {
      const int n = first + static_cast<int>(i);
      TermPair t = term(n);
      if (n == 0) {
        t.tm *= 0.5;
        t.te *= 0.5;
      }
      terms[static_cast<std::size_t>(n)] = t;
    });
  };

  SeriesResult out;
  for (;;) {
    extend_to(target);

    std::vector<double> tm(terms.size()), te(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      tm[i] = terms[i].tm;
      te[i] = terms[i].te;
    }
    out.tm = prefactor * pairwise_sum(tm);
    out.te = prefactor * pairwise_sum(te);
    out.value = out.tm + out.te;
    out.terms = static_cast<int>(terms.size());
    out.tail_bound = std::abs(prefactor) * tail_estimate(terms, decay_ratio);

    const double goal = std::max(policy.rel_tol * std::abs(out.value), policy.abs_floor);
    if (out.tail_bound <= goal) return out;

    if (out.terms >= policy.max_matsubara) {
      std::ostringstream os;
      os << "Matsubara sum not converged after " << out.terms << " terms (tail bound "
         << out.tail_bound << ", goal " << goal << ")";
      throw ConvergenceError(os.str(), out.tail_bound);
    }
    target = std::min(out.terms + std::max(kBlock, out.terms / 2), policy.max_matsubara);
  }
}

} // namespace casimir
