#pragma once

#include <cstdint>
#include <vector>

namespace phinewton {

/// All primes <= bound, by the sieve of Eratosthenes.
std::vector<unsigned long> primes_up_to(unsigned long bound);

/// Deterministic trial-division primality test (desk-scale inputs).
bool is_prime(unsigned long n);

/// Distinct prime factors of n in increasing order; empty for n <= 1.
std::vector<unsigned long> prime_factors(unsigned long n);

/// Smallest-prime-factor table for 0..bound (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t bound);

}  // namespace phinewton
