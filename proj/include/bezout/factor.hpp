#pragma once

// Desk-scale factorization in Z, F_p[x] and Q[x].
//
// Z: trial division by the primes up to `trial_bound`, then a probabilistic
// primality test on whatever is left. F_p[x]: trial division by monic
// polynomials in canonical order. Q[x]: rational roots, then Kronecker's
// interpolation search. Every search step counts against `search_steps`;
// running out raises FactorizationBudgetExceeded.

#include "bezout/ring.hpp"

#include <cstddef>
#include <vector>

namespace bezout {

struct FactorBudget {
    unsigned long trial_bound = 1'000'000; // at most 10^6
    std::size_t search_steps = 2'000'000;
};

struct PrimePower {
    Element prime; // positive / monic
    unsigned exponent = 0;
};

struct Factorization {
    Element unit;
    std::vector<PrimePower> factors; // sorted, distinct primes
};

/// a nonzero in Z, Q[x] or F_p[x]; unit * prod(prime^exponent) == a.
Factorization factor(const Element& a, const FactorBudget& budget = {});

/// Product of the distinct prime factors (positive / monic).
Element radical(const Factorization& f, const Ring& ring);

/// Sorted primes below 10^6.
const std::vector<unsigned>& small_primes();

} // namespace bezout
