#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tauroot/quiver.hpp"
#include "tauroot/ztranslation.hpp"

namespace tauroot {

/// Every permutation of {0..n-1} whose cycles all have length l, in
/// lexicographic order. Empty when l does not divide n.
std::vector<std::vector<std::size_t>> permutations_with_cycle_length(std::size_t n, int l);

/// Exhaustive search for l-th roots of tau^{-1} on ZQ with |delta(x)| <= bound
/// (default |Q0|). Candidate permutations are searched in parallel with
/// OpenMP; the result is sorted by (sigma, delta), so it does not depend on
/// scheduling.
std::vector<TQAutomorphism> find_tau_roots(const ColoredQuiver& q, int l,
                                           std::optional<int> offset_bound = std::nullopt);

/// Serial brute force over all n! permutations and every bounded delta with
/// orbit sums 1, each candidate checked by validate_autom. Kept as the
/// reference for find_tau_roots; slow.
std::vector<TQAutomorphism> find_tau_roots_reference(const ColoredQuiver& q, int l,
                                                     std::optional<int> offset_bound = std::nullopt);

}  // namespace tauroot
