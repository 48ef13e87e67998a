#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wsne {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form: lowest terms, q > 0, always with the slash
/// (integers render as "p/1"). cpp_rational keeps values normalized,
/// so this is a plain print.
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + s + "': " + e.what());
  }
}

}  // namespace wsne
