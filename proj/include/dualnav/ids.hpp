#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace dualnav {

template <class Tag>
struct Index {
  std::uint32_t value = 0;
  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const Index&) const = default;
};

using NodeId = Index<struct NodeTag>;
using CellId = Index<struct CellTag>;
using HeadingId = Index<struct HeadingTag>;

}  // namespace dualnav

template <class Tag>
struct std::hash<dualnav::Index<Tag>> {
  std::size_t operator()(const dualnav::Index<Tag>& i) const noexcept { return std::hash<std::uint32_t>{}(i.value); }
};
