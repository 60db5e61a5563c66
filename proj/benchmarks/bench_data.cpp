#include "bench_data.hpp"

#include <array>
#include <string>

#include "goldnews/random.hpp"

namespace goldnews::bench {

std::vector<AnnotatedHeadline> headlines(std::size_t n, std::uint64_t seed) {
  static constexpr std::array<const char*, 6> kSubjects = {"Gold", "Gold futures", "Bullion", "Spot gold",
                                                           "Comex gold", "Gold prices"};
  static constexpr std::array<const char*, 4> kUp = {"rises", "gains", "climbs", "jumps"};
  static constexpr std::array<const char*, 4> kDown = {"falls", "slides", "drops", "tumbles"};
  static constexpr std::array<const char*, 6> kTail = {"on weak dollar", "as equities slip", "ahead of Fed",
                                                       "after jobs data", "in Asian trade", "amid trade fears"};
  DeterministicRng rng(seed);
  std::vector<AnnotatedHeadline> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AnnotatedHeadline h;
    h.id = "b" + std::to_string(i);
    const bool price = rng.uniform_real() < 0.8;
    const bool up = rng.uniform_real() < 0.5;
    const bool vs = rng.uniform_real() < 0.2;
    std::string text = kSubjects[rng.uniform_index(kSubjects.size())];
    if (price) {
      text += ' ';
      text += up ? kUp[rng.uniform_index(4)] : kDown[rng.uniform_index(4)];
      text += " $" + std::to_string(10 + rng.uniform_index(40)) + "." + std::to_string(rng.uniform_index(100));
    } else {
      text += " demand outlook";
    }
    if (vs) text += " versus silver";
    text += ' ';
    text += kTail[rng.uniform_index(kTail.size())];
    h.text = std::move(text);
    h.labels.set(Category::PriceOrNot, price);
    h.labels.set(Category::PriceUp, price && up);
    h.labels.set(Category::PriceDown, price && !up);
    h.labels.set(Category::PastPriceInfo, price);
    h.labels.set(Category::FutureGeneralInfo, !price);
    h.labels.set(Category::PastGeneralInfo, i % 7 == 0);
    h.labels.set(Category::AssetComparison, vs);
    h.labels.set(Category::FuturePriceInfo, price && i % 5 == 0);
    h.labels.set(Category::PriceConstant, i % 11 == 0);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace goldnews::bench
