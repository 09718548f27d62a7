#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

namespace walab {

/// The eight members of the exceptional series, smallest to largest.
enum class Algebra { a1, a2, g2, d4, f4, e6, e7, e8 };

inline constexpr std::array<Algebra, 8> kAlgebras = {
    Algebra::a1, Algebra::a2, Algebra::g2, Algebra::d4,
    Algebra::f4, Algebra::e6, Algebra::e7, Algebra::e8};

/// Only the eight series members are constructible.
struct AlgebraId {
  Algebra value;

  char family() const;
  int rank() const;
  std::string name() const;

  /// Accepts "a1", "a2", "g2", "d4", "f4", "e6", "e7", "e8" (case-insensitive).
  /// Throws std::invalid_argument for anything else.
  static AlgebraId parse(std::string_view name);

  auto operator<=>(const AlgebraId&) const = default;
};

} // namespace walab
