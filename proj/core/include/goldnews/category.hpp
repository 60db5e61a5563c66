#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace goldnews {

// The nine annotation dimensions. Multi-label: no exclusivity between them.
enum class Category : std::uint8_t {
  PriceOrNot = 0,
  PriceUp,
  PriceConstant,
  PriceDown,
  PastPriceInfo,
  FuturePriceInfo,
  PastGeneralInfo,
  FutureGeneralInfo,
  AssetComparison,
};

inline constexpr std::size_t kCategoryCount = 9;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::PriceOrNot,      Category::PriceUp,         Category::PriceConstant,
    Category::PriceDown,       Category::PastPriceInfo,   Category::FuturePriceInfo,
    Category::PastGeneralInfo, Category::FutureGeneralInfo, Category::AssetComparison,
};

constexpr std::size_t index_of(Category c) { return static_cast<std::size_t>(c); }

// Canonical name, used in file headers, config keys and CLI flags.
std::string_view name(Category c);

std::optional<Category> category_from_name(std::string_view name);

// One binary label per category.
class LabelSet {
 public:
  constexpr bool operator[](Category c) const { return bits_[index_of(c)] != 0; }
  constexpr void set(Category c, bool value) { bits_[index_of(c)] = value ? 1 : 0; }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::array<std::uint8_t, kCategoryCount> bits_{};
};

}  // namespace goldnews
