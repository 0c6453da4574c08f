#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "qrf/errors.hpp"

namespace qrf {

/// Identifies a particle by its index. Particle 0 is printed as "A", 1 as "B",
/// and so on; the quantum layer works with A, B and C only.
struct FrameLabel {
  std::size_t index = 0;

  constexpr FrameLabel() = default;
  constexpr explicit FrameLabel(std::size_t i) : index(i) {}

  std::string name() const {
    if (index < 26) return std::string(1, static_cast<char>('A' + index));
    return "P" + std::to_string(index);
  }

  static FrameLabel from_name(std::string_view name) {
    if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z') {
      return FrameLabel(static_cast<std::size_t>(name[0] - 'A'));
    }
    throw InvalidArgument("unrecognised frame label '" + std::string(name) + "'");
  }

  auto operator<=>(const FrameLabel&) const = default;
};

namespace frames {
inline constexpr FrameLabel A{0};
inline constexpr FrameLabel B{1};
inline constexpr FrameLabel C{2};
}  // namespace frames

}  // namespace qrf
