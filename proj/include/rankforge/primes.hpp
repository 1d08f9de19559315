#pragma once

#include <cstdint>
#include <vector>

namespace rankforge {

/// All primes p <= limit, ascending (sieve of Eratosthenes over odd numbers).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace rankforge
