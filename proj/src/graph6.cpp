// Copyright 2026 The chemgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chemgraph/graph6.hpp"

#include <cstdint>
#include <vector>

namespace chemgraph {
namespace {

constexpr char kLow = 63;
constexpr char kHigh = 126;
constexpr std::string_view kHeader = ">>graph6<<";

bool in_range(char c) { return c >= kLow && c <= kHigh; }

[[noreturn]] void fail(Graph6ErrorKind kind, const std::string& what) {
  throw Graph6Error(kind, "graph6: " + what);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with("\r\n")) {
    text.remove_suffix(2);
  } else if (text.ends_with('\n')) {
    text.remove_suffix(1);
  }
  if (text.empty()) fail(Graph6ErrorKind::kEmpty, "empty record");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (!in_range(text[0])) fail(Graph6ErrorKind::kMalformedLengthPrefix, "bad length byte");
  if (text[0] != kHigh) {
    n = text[0] - kLow;
    pos = 1;
  } else {
    // 126 126 introduces the 36-bit form; anything of that size is far above
    // the 64-vertex engine limit, but the prefix itself is well formed.
    const bool large = text.size() > 1 && text[1] == kHigh;
    const std::size_t digits = large ? 6 : 3;
    const std::size_t start = large ? 2 : 1;
    if (text.size() < start + digits) fail(Graph6ErrorKind::kMalformedLengthPrefix, "short length prefix");
    for (std::size_t i = start; i < start + digits; ++i) {
      if (!in_range(text[i])) fail(Graph6ErrorKind::kMalformedLengthPrefix, "bad length byte");
      n = (n << 6) | (text[i] - kLow);
    }
    if (n <= (large ? 258047 : 62)) {
      fail(Graph6ErrorKind::kMalformedLengthPrefix, "non-minimal length prefix");
    }
    pos = start + digits;
  }
  if (n > Graph::kMaxOrder) {
    fail(Graph6ErrorKind::kOrderTooLarge, "order " + std::to_string(n) + " above 64");
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  const std::string_view body = text.substr(pos);
  for (std::size_t i = 0; i < body.size() && i < bytes; ++i) {
    if (!in_range(body[i])) fail(Graph6ErrorKind::kCharacterOutOfRange, "character out of range");
  }
  if (body.size() < bytes) fail(Graph6ErrorKind::kTruncated, "record truncated");
  if (body.size() > bytes) fail(Graph6ErrorKind::kTrailingGarbage, "trailing garbage after record");

  const int order = static_cast<int>(n);
  std::vector<std::uint64_t> rows(order, 0);
  std::int64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = body[static_cast<std::size_t>(k / 6)] - kLow;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = body.back() - kLow;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) fail(Graph6ErrorKind::kNonZeroPadding, "non-zero padding bits");
  }
  return Graph::from_rows(rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLow));
  } else {
    out.push_back(kHigh);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kLow));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kLow));
    out.push_back(static_cast<char>((n & 63) + kLow));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kLow));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kLow));
  return out;
}

}  // namespace chemgraph
