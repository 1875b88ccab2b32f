#ifndef GRAPHLINK_RATIONAL_HPP
#define GRAPHLINK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace graphlink {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;
using MatZ = std::vector<VecZ>;  // row-major

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p", "-p" or "p/q" into an exact rational.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal '" + s + "'");
  }
}

inline Rat dot(const VecQ& phi, const VecZ& v) {
  if (phi.size() != v.size()) throw Error("dimension mismatch in pairing");
  Rat acc = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) acc += phi[i] * Rat(v[i]);
  return acc;
}

inline Rat dot(const VecQ& phi, const VecQ& v) {
  if (phi.size() != v.size()) throw Error("dimension mismatch in pairing");
  Rat acc = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) acc += phi[i] * v[i];
  return acc;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace graphlink

#endif  // GRAPHLINK_RATIONAL_HPP
