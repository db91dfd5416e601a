#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigma {

using BigInt = boost::multiprecision::cpp_int;

/// prime -> exponent
using Factorization = std::map<std::uint64_t, unsigned>;

bool is_prime(std::uint64_t n);

/// Throws InvalidArgument for n < 1, or when a cofactor above 2^64 cannot be
/// split by trial division.
Factorization factorize(BigInt const& n);

std::vector<std::uint64_t> prime_divisors(BigInt const& n);

/// Narrowing conversion; throws CapExceeded when n does not fit.
std::uint64_t to_u64(BigInt const& n);

std::string to_string(BigInt const& n);

}  // namespace sigma
