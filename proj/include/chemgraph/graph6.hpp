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

#ifndef CHEMGRAPH_GRAPH6_HPP_
#define CHEMGRAPH_GRAPH6_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "chemgraph/graph.hpp"

namespace chemgraph {

enum class Graph6ErrorKind {
  kEmpty,
  kMalformedLengthPrefix,
  kCharacterOutOfRange,
  kTruncated,
  kTrailingGarbage,
  kNonZeroPadding,
  kOrderTooLarge,  // valid record, but above Graph::kMaxOrder
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most
// significant bit first, each byte offset by 63, the last one zero-padded.
// N(n) is the single byte n+63 for n <= 62, otherwise 126 followed by n in
// three 6-bit bytes.

/// Parses one record. An optional ">>graph6<<" header and a single trailing
/// line terminator are accepted.
Graph parse_graph6(std::string_view text);

/// Encodes without header or line terminator.
std::string write_graph6(const Graph& g);

}  // namespace chemgraph

#endif  // CHEMGRAPH_GRAPH6_HPP_
