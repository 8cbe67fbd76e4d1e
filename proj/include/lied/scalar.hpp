#pragma once

#include <gmpxx.h>

#include <string>

namespace lied {

using Int = mpz_class;
using Rat = mpq_class;

// "num/den" or "num"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

inline Rat to_rat(const Int& z) { return Rat(z); }
inline Rat to_rat(const Rat& q) { return q; }

template <class K>
K from_rat(const Rat& q);

template <>
inline Rat from_rat<Rat>(const Rat& q) { return q; }

}  // namespace lied
