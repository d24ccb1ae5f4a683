#include "rotunda/numeric.hpp"

#include <sstream>
#include <stdexcept>

namespace rotunda {

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive_part(const IntVec& v) {
  Int g = content(v);
  if (g == 0) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  for (const Int& x : out) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : out) y = -y;
      break;
    }
  }
  return out;
}

IntVec primitive_integer_vector(const RatVec& v) {
  Int den = 1;
  for (const Rat& q : v) den = lcm(den, q.get_den());
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = scaled.get_num();
  }
  return primitive_part(w);
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      return Rat(n);
    }
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = fnv1a64(data);
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace rotunda
