#ifndef WPVOL_FORMAT_HPP
#define WPVOL_FORMAT_HPP

#include <string>

#include "wpvol/rat.hpp"

namespace wpvol::fmt {

/// Unicode superscript digits, e.g. 12 -> "¹²".
std::string superscript(unsigned v);
/// Unicode subscript digits, e.g. 3 -> "₃".
std::string subscript(unsigned v);
/// Signed rational multiple of a symbol product: "2π²", "L²/24", "-π⁴/3", or
/// just the rational when `symbols` is empty. No leading "+".
std::string scaled(const Rat& q, const std::string& symbols);

}  // namespace wpvol::fmt

#endif  // WPVOL_FORMAT_HPP
