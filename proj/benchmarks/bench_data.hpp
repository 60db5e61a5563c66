#pragma once

#include <cstdint>
#include <vector>

#include "goldnews/corpus.hpp"

namespace goldnews::bench {

// Headlines built from a small vocabulary; labels follow keyword rules so the
// classifiers have something to learn.
std::vector<AnnotatedHeadline> headlines(std::size_t n, std::uint64_t seed);

}  // namespace goldnews::bench
