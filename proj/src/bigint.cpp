#include "sigma/bigint.hpp"

#include <limits>
#include <numeric>

#include "sigma/errors.hpp"

namespace sigma {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Pollard rho for 64-bit composites.
std::uint64_t rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(std::uint64_t n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
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

Factorization factorize(BigInt const& n) {
  if (n < 1) throw InvalidArgument("factorize: argument must be positive");
  Factorization out;
  BigInt rest = n;
  for (std::uint64_t p = 2; p < 100000 && rest > std::numeric_limits<std::uint64_t>::max(); ++p) {
    while (rest % p == 0) {
      ++out[p];
      rest /= p;
    }
  }
  if (rest > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument("factorize: cofactor too large for trial division: " + to_string(rest));
  }
  std::uint64_t r = static_cast<std::uint64_t>(rest);
  for (std::uint64_t p = 2; p < 1000 && p * p <= r; ++p) {
    while (r % p == 0) {
      ++out[p];
      r /= p;
    }
  }
  factor_u64(r, out);
  return out;
}

std::vector<std::uint64_t> prime_divisors(BigInt const& n) {
  std::vector<std::uint64_t> ps;
  for (auto const& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

std::uint64_t to_u64(BigInt const& n) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw CapExceeded("integer does not fit in 64 bits: " + to_string(n));
  }
  return static_cast<std::uint64_t>(n);
}

std::string to_string(BigInt const& n) { return n.str(); }

}  // namespace sigma
