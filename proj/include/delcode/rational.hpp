#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace delcode {

// Exact probabilities: every failure fraction in this library is a ratio of
// two event counts, so we keep them as normalized rationals end to end and
// only convert to double for display.
using Ratio = boost::rational<long long>;

std::string ratio_str(const Ratio& r);  // "num/den", denominator always > 0

// Accepts "a/b", a bare integer, or a plain decimal such as "0.25".
Ratio parse_ratio(std::string_view text);

double ratio_double(const Ratio& r);

}  // namespace delcode
