#include "weilbound/arith.hpp"

#include <cmath>

namespace weilbound {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// r^k, or 0 when it exceeds 2^64 - 1.
std::uint64_t checked_pow(std::uint64_t r, int k) {
  u128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= r;
    if (acc > ~std::uint64_t{0}) return 0;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t integer_root(std::uint64_t q, int k) {
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
  // Fix up floating-point error in either direction.
  while (r > 1 && (checked_pow(r, k) == 0 || checked_pow(r, k) > q)) --r;
  while (checked_pow(r + 1, k) != 0 && checked_pow(r + 1, k) <= q) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (int k = 63; k >= 1; --k) {
    const std::uint64_t r = integer_root(q, k);
    if (r >= 2 && checked_pow(r, k) == q && is_prime(r)) return PrimePower{r, k};
  }
  return std::nullopt;
}

}  // namespace weilbound
