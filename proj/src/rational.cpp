#include "walab/rational.hpp"

#include <stdexcept>

namespace walab {

std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string buf(s);
  std::size_t slash = buf.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(buf));
    BigInt num(buf.substr(0, slash));
    BigInt den(buf.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + buf);
  }
}

bool is_integer(const Rat& r) { return denominator(r) == 1; }

BigInt as_integer(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("not an integer: " + rat_str(r));
  return numerator(r);
}

} // namespace walab
