#pragma once

#include <cstdint>
#include <optional>

namespace weilbound {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  int k;
};

/// q = p^k with p prime and k >= 1, or empty.
std::optional<PrimePower> prime_power(std::uint64_t q);

}  // namespace weilbound
