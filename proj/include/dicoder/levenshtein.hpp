#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <limits>
#include <ranges>
#include <string_view>
#include <vector>

#include "dicoder/detail/utf8.hpp"

namespace dicoder {

/// Unit-cost edit distance (insertions, deletions, substitutions) between
/// two random-access sequences. Two-row dynamic programming.
template <std::ranges::random_access_range A, std::ranges::random_access_range B>
std::size_t edit_distance(const A& a, const B& b) {
  const auto n = static_cast<std::size_t>(std::ranges::size(a));
  const auto m = static_cast<std::size_t>(std::ranges::size(b));
  if (n == 0) return m;
  if (m == 0) return n;

  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  auto ai = std::ranges::begin(a);
  for (std::size_t i = 1; i <= n; ++i, ++ai) {
    cur[0] = i;
    auto bj = std::ranges::begin(b);
    for (std::size_t j = 1; j <= m; ++j, ++bj) {
      const std::size_t sub = prev[j - 1] + (*ai == *bj ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

/// Edit distance if it is at most `max_dist`, otherwise `max_dist + 1`.
/// Only the diagonal band of width 2*max_dist+1 is evaluated and the scan
/// stops as soon as every cell of a row exceeds the bound.
template <std::ranges::random_access_range A, std::ranges::random_access_range B>
std::size_t bounded_edit_distance(const A& a, const B& b, std::size_t max_dist) {
  const auto n = static_cast<std::size_t>(std::ranges::size(a));
  const auto m = static_cast<std::size_t>(std::ranges::size(b));
  const std::size_t over = max_dist + 1;
  if ((n > m ? n - m : m - n) > max_dist) return over;
  if (n == 0) return m;
  if (m == 0) return n;

  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> prev(m + 1, kInf), cur(m + 1, kInf);
  for (std::size_t j = 0; j <= std::min(m, max_dist); ++j) prev[j] = j;

  auto a_begin = std::ranges::begin(a);
  auto b_begin = std::ranges::begin(b);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > max_dist ? i - max_dist : 1;
    const std::size_t hi = std::min(m, i + max_dist);
    std::fill(cur.begin(), cur.end(), kInf);
    cur[0] = i <= max_dist ? i : kInf;
    std::size_t row_min = cur[0];
    const auto& ac = a_begin[static_cast<std::ptrdiff_t>(i - 1)];
    for (std::size_t j = lo; j <= hi; ++j) {
      const std::size_t sub =
          prev[j - 1] + (ac == b_begin[static_cast<std::ptrdiff_t>(j - 1)] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > max_dist) return over;
    std::swap(prev, cur);
  }
  return std::min(prev[m], over);
}

/// Levenshtein distance between UTF-8 strings, counted in code points.
inline std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  if (detail::is_ascii(a) && detail::is_ascii(b)) {
    return edit_distance(a, b);
  }
  return edit_distance(detail::to_u32(a), detail::to_u32(b));
}

inline std::size_t bounded_levenshtein(std::string_view a, std::string_view b,
                                       std::size_t max_dist) {
  if (detail::is_ascii(a) && detail::is_ascii(b)) {
    return bounded_edit_distance(a, b, max_dist);
  }
  return bounded_edit_distance(detail::to_u32(a), detail::to_u32(b), max_dist);
}

}  // namespace dicoder
