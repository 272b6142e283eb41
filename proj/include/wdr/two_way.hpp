#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace wdr {

/// Ordered pair of one-way distances between two vertices. The only type
/// with a zero component is the diagonal type (0,0).
struct TwoWayType {
  std::uint8_t forward = 0;
  std::uint8_t backward = 0;

  constexpr TwoWayType conjugate() const { return {backward, forward}; }
  constexpr bool is_identity() const { return forward == 0; }
  /// Arc types are exactly the types with forward distance 1.
  constexpr bool is_arc() const { return forward == 1; }

  friend constexpr auto operator<=>(const TwoWayType&, const TwoWayType&) = default;
};

inline std::string to_string(TwoWayType t) {
  return "(" + std::to_string(t.forward) + "," + std::to_string(t.backward) + ")";
}

}  // namespace wdr
