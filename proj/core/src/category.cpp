#include "goldnews/category.hpp"

namespace goldnews {
namespace {

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "PriceOrNot",      "PriceUp",         "PriceConstant",
    "PriceDown",       "PastPriceInfo",   "FuturePriceInfo",
    "PastGeneralInfo", "FutureGeneralInfo", "AssetComparison",
};

}  // namespace

std::string_view name(Category c) { return kNames[index_of(c)]; }

std::optional<Category> category_from_name(std::string_view n) {
  for (Category c : kAllCategories) {
    if (kNames[index_of(c)] == n) return c;
  }
  return std::nullopt;
}

}  // namespace goldnews
