#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace rotunda {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Quotient and remainder with 0 <= r < |b| (Euclidean division).
inline void fdiv_qr(Int& q, Int& r, const Int& a, const Int& b) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// gcd of the absolute values of a vector's entries; 0 for the zero vector.
Int content(const IntVec& v);

/// Divides by the content and flips sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
IntVec primitive_part(const IntVec& v);

/// Scales a rational vector to a primitive integer vector with positive
/// first nonzero entry. Zero vector maps to zero.
IntVec primitive_integer_vector(const RatVec& v);

bool is_zero_vec(const IntVec& v);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

/// Parses "p" or "p/q" with arbitrary-precision parts. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// FNV-1a 64-bit digest, used to fingerprint report inputs.
std::uint64_t fnv1a64(const std::string& data);
std::string fnv1a64_hex(const std::string& data);

}  // namespace rotunda
