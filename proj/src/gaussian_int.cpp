#include "gasimon/gaussian_int.hpp"

#include <cstddef>

#include "gasimon/errors.hpp"

namespace gasimon {

std::string GaussianInt::str() const {
  if (re == 0 && im == 0) return "0";
  std::string out;
  if (re != 0) out += re.str();
  if (im != 0) {
    if (im == 1) {
      out += re != 0 ? "+i" : "i";
    } else if (im == -1) {
      out += "-i";
    } else {
      if (re != 0 && im > 0) out += '+';
      out += im.str();
      out += 'i';
    }
  }
  return out;
}

GaussianInt GaussianInt::parse(std::string_view token) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> SyntaxError {
    return SyntaxError("bad complex token '" + std::string(token) + "': " + why, 1,
                       static_cast<int>(pos) + 1);
  };

  // One signed part: [+-]? (digits 'i'? | 'i'), with a bare 'i' meaning 1i.
  auto read_part = [&](Coefficient& re, Coefficient& im) {
    bool negative = false;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
      negative = token[pos] == '-';
      ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < token.size() && token[pos] >= '0' && token[pos] <= '9') ++pos;
    std::string digits(token.substr(digits_start, pos - digits_start));
    bool imaginary = pos < token.size() && token[pos] == 'i';
    if (imaginary) ++pos;
    if (digits.empty() && !imaginary) throw fail("expected digits or 'i'");
    Coefficient magnitude = digits.empty() ? Coefficient(1) : Coefficient(digits);
    if (negative) magnitude = -magnitude;
    (imaginary ? im : re) += magnitude;
  };

  if (token.empty()) throw fail("empty");
  Coefficient re = 0, im = 0;
  read_part(re, im);
  if (pos < token.size()) read_part(re, im);
  if (pos != token.size()) throw fail("trailing characters");
  return GaussianInt(re, im);
}

}  // namespace gasimon
