#include "walab/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace walab {

char AlgebraId::family() const {
  switch (value) {
    case Algebra::a1:
    case Algebra::a2: return 'A';
    case Algebra::g2: return 'G';
    case Algebra::d4: return 'D';
    case Algebra::f4: return 'F';
    default: return 'E';
  }
}

int AlgebraId::rank() const {
  switch (value) {
    case Algebra::a1: return 1;
    case Algebra::a2:
    case Algebra::g2: return 2;
    case Algebra::d4:
    case Algebra::f4: return 4;
    case Algebra::e6: return 6;
    case Algebra::e7: return 7;
    case Algebra::e8: return 8;
  }
  throw std::logic_error("bad algebra enum");
}

std::string AlgebraId::name() const {
  char f = static_cast<char>(std::tolower(family()));
  return std::string{f} + std::to_string(rank());
}

AlgebraId AlgebraId::parse(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (Algebra a : kAlgebras) {
    if (AlgebraId{a}.name() == s) return AlgebraId{a};
  }
  throw std::invalid_argument("unsupported algebra: " + std::string(name) +
                              " (expected one of a1 a2 g2 d4 f4 e6 e7 e8)");
}

} // namespace walab
