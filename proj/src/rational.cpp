#include "delcode/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace delcode {

std::string ratio_str(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Ratio parse_ratio(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t u1 = 0, u2 = 0;
      const long long num = std::stoll(s.substr(0, slash), &u1);
      const long long den = std::stoll(s.substr(slash + 1), &u2);
      if (u1 != slash || u2 != s.size() - slash - 1) throw std::invalid_argument(s);
      return Ratio(num, den);  // boost throws on den == 0
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Ratio(v);
    }
    const std::string ipart = s.substr(0, dot);
    const std::string fpart = s.substr(dot + 1);
    if (fpart.empty() || fpart.size() > 18) throw std::invalid_argument(s);
    std::size_t u1 = 0, u2 = 0;
    const long long whole = ipart.empty() ? 0 : std::stoll(ipart, &u1);
    const long long frac = std::stoll(fpart, &u2);
    if ((!ipart.empty() && u1 != ipart.size()) || u2 != fpart.size() || frac < 0) {
      throw std::invalid_argument(s);
    }
    long long scale = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    const bool neg = !ipart.empty() && ipart[0] == '-';
    return Ratio(whole) + (neg ? -Ratio(frac, scale) : Ratio(frac, scale));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_ratio: cannot parse \"" + s + "\"");
  }
}

double ratio_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace delcode
