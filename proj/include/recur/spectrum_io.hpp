#pragma once

#include <iosfwd>
#include <string>

#include "recur/spectrum.hpp"

namespace recur::fourier {

// Line-oriented text format:
//
//   spectrum
//   dimension <d>
//   names <name_1> ... <name_d>
//   cardinalities <l_1> ... <l_d>
//   attr_set <m_1> ... <m_k>
//   energy_threshold <real>
//   coefficients <count>
//   <digits> <real> <imag>      (one line per coefficient)
//
// Reals are written with 17 significant digits, so a write/read cycle is
// bit-exact. Digits are concatenated when every attr_set cardinality is at
// most 10, otherwise joined with '-'; a spectrum with an empty attr_set uses
// "." for its single possible partition.

void write_spectrum(std::ostream& out, const Spectrum& s);
Spectrum read_spectrum(std::istream& in);

std::string format_real(double v);
std::string format_digits(const Spectrum& s, const Digits& j);

}  // namespace recur::fourier
