/*
  integers.hpp — exact integer and rational scalars used throughout.

  All user-visible arithmetic is arbitrary precision (boost cpp_int); the
  enumeration engine keeps a checked 64-bit fast path internally and
  escalates to Integer when a reflection would wrap.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace weyl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& x) { return x.str(); }

// 64-bit finalizer from splitmix64; used for hashing coordinate vectors.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace weyl
