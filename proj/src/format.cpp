#include "wpvol/format.hpp"

#include <array>

namespace wpvol::fmt {

namespace {

std::string map_digits(unsigned v, const std::array<const char*, 10>& glyphs) {
  const std::string digits = std::to_string(v);
  std::string out;
  for (char c : digits) out += glyphs[static_cast<std::size_t>(c - '0')];
  return out;
}

}  // namespace

std::string superscript(unsigned v) {
  static constexpr std::array<const char*, 10> kSup{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return map_digits(v, kSup);
}

std::string subscript(unsigned v) {
  static constexpr std::array<const char*, 10> kSub{"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return map_digits(v, kSub);
}

std::string scaled(const Rat& q, const std::string& symbols) {
  if (symbols.empty()) return q.str();
  std::string out = q.sign() < 0 ? "-" : "";
  const mpz_class num = abs(q.numerator());
  if (num != 1) out += num.get_str();
  out += symbols;
  if (!q.is_integer()) out += "/" + q.denominator().get_str();
  return out;
}

}  // namespace wpvol::fmt
