#pragma once

// Explicit formulas in terms of the binary weight wt(n). Each costs
// O(log n) word operations.

#include <cstddef>

#include "tplab/numkit.hpp"
#include "tplab/sequence.hpp"

namespace tplab {

/// Ulam-Warburton cells added at stage n: 4 * 3^(wt(n-1) - 1) for n >= 2.
Nat uw_u(Nat n);
/// d-dimensional analogue: 2d (2d - 1)^(wt(n-1) - 1) for n >= 2.
Nat uw_d(unsigned d, Nat n);

/// Toothpicks added at stage n, without recursion.
Nat t_explicit(Nat n);
/// Limit row F(i) = 2 sum_m 2^(wt(i+m) - m) C(wt(i+m), m).
Nat f_explicit(Nat i);
/// Coefficient of x^n in prod_{k >= 0} (1 + gamma x^(2^k - 1) + delta x^(2^k)).
Int hve_a(Int gamma, Int delta, Nat n);
/// hve_a without the early stop, summing m up to n + 1. Audit only.
Int hve_a_unbounded(Int gamma, Int delta, Nat n);

/// Nonzero terms in the hve_a(1, 1, n) sum, i.e. m with m <= wt(n + m).
Nat hve_terms(Nat n);
/// Same count without the early stop. Audit only.
Nat hve_terms_unbounded(Nat n);

/// Leftist toothpicks added at stage n >= 1.
Nat leftist_l(Nat n);
/// Gould's sequence 2^wt(n).
Nat gould(Nat n);
/// T-toothpicks added at stage n.
Nat ttp_tau(Nat n);
/// Maltese cross cells added at stage n.
Nat maltese_m(Nat n);

/// Rule 942 auxiliary sequence.
Nat r942_delta(Nat n);
/// Rule 942 cells added at stage n.
Nat r942_w(Nat n);
/// w(n) - u(n).
Nat r942_wprime(Nat n);

/// Helpers producing a(0..=n) tagged as closed form.
IntSequence closedform_seq(std::size_t n, Nat (*f)(Nat), const char* label);

}  // namespace tplab
