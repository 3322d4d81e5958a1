#pragma once

// Block recurrences indexed by n = 2^k + i.
//
// Every sequence has a scalar form, memoized per call, that handles indices
// far beyond what a dense prefix could hold, and a `_seq` form returning
// a(0..=n) in a single forward pass.

#include <cstddef>
#include <utility>
#include <vector>

#include "tplab/numkit.hpp"
#include "tplab/sequence.hpp"

namespace tplab {

Nat corner_c(Nat n);
Nat toothpick_t(Nat n);
Nat toothpick_T(Nat n);
Nat rect_rho(Nat n);
Nat rect_r(Nat n);
/// Running sum of rect_r, evaluated from a dense prefix.
Nat rect_R(Nat n);
Nat eight_v1(Nat n);
Nat eight_v2(Nat n);
Nat eight_v(Nat n);
Nat f_sequence(Nat n);
Nat uw_u_recurrence(Nat n);

IntSequence corner_c_seq(std::size_t n);
IntSequence toothpick_t_seq(std::size_t n);
IntSequence toothpick_T_seq(std::size_t n);
IntSequence rect_rho_seq(std::size_t n);
IntSequence rect_r_seq(std::size_t n);
IntSequence rect_R_seq(std::size_t n);
IntSequence eight_v1_seq(std::size_t n);
IntSequence eight_v2_seq(std::size_t n);
IntSequence eight_v_seq(std::size_t n);
IntSequence f_sequence_seq(std::size_t n);
IntSequence uw_u_recurrence_seq(std::size_t n);

/// Coefficients of x(alpha + beta x) * prod_{k >= start_k} (1 + gamma x^(2^k - 1) + delta x^(2^k)).
struct RecurrenceSpec {
  Int alpha = 1;
  Int beta = 1;
  Int gamma = 1;
  Int delta = 2;
  unsigned start_k = 1;  // 0 or 1
  /// Fixed values that replace the block rule of the k >= 1 product at the
  /// listed indices; later terms recurse onto the replaced values.
  std::vector<std::pair<Nat, Int>> overrides;
};

Int block_product_recurrence(const RecurrenceSpec& spec, Nat n);
/// a(0..=n) for the same spec.
std::vector<Int> block_product_recurrence_seq(const RecurrenceSpec& spec, std::size_t n);

}  // namespace tplab
