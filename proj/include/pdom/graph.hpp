// Copyright 2026 The pdom Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdom {

/// Thrown when a graph parameter, vertex name or index range is rejected.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal invariant breach; never expected in a correct build.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline int reduce_mod(long long i, int n) {
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

enum class Ring : std::uint8_t { Outer, Inner };

/// A vertex u_i (Outer) or v_i (Inner). Ordering is the canonical one:
/// every outer vertex precedes every inner vertex, then ascending index.
struct Vertex {
  Ring ring = Ring::Outer;
  int index = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(const Vertex& v) {
  return (v.ring == Ring::Outer ? "u" : "v") + std::to_string(v.index);
}

/// The generalized Petersen graph P(n,k). Adjacency is arithmetic, so the
/// object is two integers regardless of n.
class PetersenGraph {
 public:
  PetersenGraph(int n, int k) : n_(n), k_(k) {
    if (n < 3) {
      throw ParameterError("n must be >= 3 (got " + std::to_string(n) + ")");
    }
    if (k < 1) {
      throw ParameterError("k must be >= 1 (got " + std::to_string(k) + ")");
    }
    if (2 * k >= n) {
      throw ParameterError("k must be < n/2 (got n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ")");
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int vertex_count() const { return 2 * n_; }
  int edge_count() const { return 3 * n_; }

  Vertex outer(long long i) const { return {Ring::Outer, reduce_mod(i, n_)}; }
  Vertex inner(long long i) const { return {Ring::Inner, reduce_mod(i, n_)}; }

  bool contains(const Vertex& v) const { return v.index >= 0 && v.index < n_; }

  /// Position of v in canonical order: u_0..u_{n-1}, v_0..v_{n-1}.
  int canonical_index(const Vertex& v) const {
    require(v);
    return v.ring == Ring::Outer ? v.index : n_ + v.index;
  }

  Vertex vertex_at(int canonical) const {
    if (canonical < 0 || canonical >= 2 * n_) {
      throw ParameterError("canonical index out of range: " +
                           std::to_string(canonical));
    }
    return canonical < n_ ? outer(canonical) : inner(canonical - n_);
  }

  /// The three neighbours of v in canonical order.
  std::array<Vertex, 3> neighbors(const Vertex& v) const {
    require(v);
    const int i = v.index;
    std::array<Vertex, 3> out;
    if (v.ring == Ring::Outer) {
      out = {outer(i - 1), outer(i + 1), inner(i)};
    } else {
      out = {inner(i - k_), inner(i + k_), outer(i)};
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool adjacent(const Vertex& a, const Vertex& b) const {
    const auto nb = neighbors(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(2 * n_);
    for (int c = 0; c < 2 * n_; ++c) out.push_back(vertex_at(c));
    return out;
  }

  friend bool operator==(const PetersenGraph&, const PetersenGraph&) = default;

 private:
  void require(const Vertex& v) const {
    if (!contains(v)) {
      throw ParameterError("vertex " + to_string(v) + " is not in P(" +
                           std::to_string(n_) + "," + std::to_string(k_) + ")");
    }
  }

  int n_;
  int k_;
};

inline PetersenGraph build_petersen(int n, int k) { return PetersenGraph(n, k); }

/// Subset of the 2n vertices of a P(n,k), stored as a characteristic vector
/// in canonical order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), bits_(static_cast<std::size_t>(2 * n), 0) {}
  VertexSet(int n, std::initializer_list<Vertex> vs) : VertexSet(n) {
    for (const auto& v : vs) insert(v);
  }

  static VertexSet all(int n) {
    VertexSet s(n);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.size_ = 2 * n;
    return s;
  }

  int n() const { return n_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(const Vertex& v) const { return bits_[slot(v)] != 0; }
  bool contains_canonical(int c) const { return bits_[static_cast<std::size_t>(c)] != 0; }

  void insert(const Vertex& v) {
    auto& b = bits_[slot(v)];
    size_ += b == 0;
    b = 1;
  }
  void erase(const Vertex& v) {
    auto& b = bits_[slot(v)];
    size_ -= b != 0;
    b = 0;
  }
  void insert_canonical(int c) { insert(c < n_ ? Vertex{Ring::Outer, c} : Vertex{Ring::Inner, c - n_}); }

  /// Members in canonical order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (int c = 0; c < 2 * n_; ++c) {
      if (bits_[c]) out.push_back(c < n_ ? Vertex{Ring::Outer, c} : Vertex{Ring::Inner, c - n_});
    }
    return out;
  }

  std::span<const std::uint8_t> characteristic() const { return bits_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t slot(const Vertex& v) const {
    if (v.index < 0 || v.index >= n_) {
      throw ParameterError("vertex " + to_string(v) + " out of range for n=" +
                           std::to_string(n_));
    }
    return static_cast<std::size_t>(v.ring == Ring::Outer ? v.index : n_ + v.index);
  }

  int n_ = 0;
  int size_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Parses "u<i>" / "v<i>"; the index must already lie in [0, n).
inline Vertex parse_vertex(std::string_view text, int n) {
  auto bad = [&] { return ParameterError("bad vertex name '" + std::string(text) + "'"); };
  if (text.size() < 2 || (text[0] != 'u' && text[0] != 'v')) throw bad();
  long long idx = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw bad();
    idx = idx * 10 + (c - '0');
    if (idx > 1'000'000'000) throw bad();
  }
  if (idx >= n) {
    throw ParameterError("vertex '" + std::string(text) + "' out of range for n=" +
                         std::to_string(n));
  }
  return {text[0] == 'u' ? Ring::Outer : Ring::Inner, static_cast<int>(idx)};
}

/// Comma separated vertex names, canonical order.
inline std::string format_set(const VertexSet& s) {
  std::string out;
  for (const auto& v : s.members()) {
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

inline std::vector<std::string> vertex_names(const VertexSet& s) {
  std::vector<std::string> out;
  for (const auto& v : s.members()) out.push_back(to_string(v));
  return out;
}

inline VertexSet parse_set(std::string_view text, int n) {
  VertexSet s(n);
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (!token.empty()) s.insert(parse_vertex(token, n));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

enum class BlockSign : std::uint8_t { Positive, Negative };

/// Six-vertex window centred on column i of P(n,2). Vertices are listed as
/// v_{i-1}, v_i, v_{i+1}, u_{i-1}, u_i, u_{i+1}.
struct Block {
  int center = 0;
  std::array<Vertex, 6> vertices{};
  BlockSign sign = BlockSign::Negative;

  bool contains(const Vertex& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
};

inline void require_k2(const PetersenGraph& g, const char* what) {
  if (g.k() != 2) {
    throw ParameterError(std::string(what) + " requires k = 2 (got k=" +
                         std::to_string(g.k()) + ")");
  }
}

inline Block block_at(const PetersenGraph& g, long long i) {
  require_k2(g, "block_at");
  if (g.n() < 5) throw ParameterError("block_at requires n >= 5");
  Block b;
  b.center = reduce_mod(i, g.n());
  const int c = b.center;
  b.vertices = {g.inner(c - 1), g.inner(c), g.inner(c + 1),
                g.outer(c - 1), g.outer(c), g.outer(c + 1)};
  int odd = 0;
  for (int d = -1; d <= 1; ++d) odd += reduce_mod(c + d, g.n()) % 2;
  b.sign = odd == 2 ? BlockSign::Positive : BlockSign::Negative;
  return b;
}

/// Neighbouring blocks in the non-overlapping tiling (stride 3).
inline Block block_right(const PetersenGraph& g, const Block& b) { return block_at(g, b.center + 3); }
inline Block block_left(const PetersenGraph& g, const Block& b) { return block_at(g, b.center - 3); }

/// The stride-3 tiling b, b^+, b^{++}, ... starting at `first`, ⌊n/3⌋ blocks.
inline std::vector<Block> stride_blocks(const PetersenGraph& g, int first) {
  std::vector<Block> out;
  for (int t = 0; t < g.n() / 3; ++t) out.push_back(block_at(g, first + 3LL * t));
  return out;
}

inline std::vector<Block> all_blocks(const PetersenGraph& g) {
  std::vector<Block> out;
  out.reserve(g.n());
  for (int i = 0; i < g.n(); ++i) out.push_back(block_at(g, i));
  return out;
}

/// Column p_i = {u_i, v_i}.
struct Pair {
  int index = 0;
  std::array<Vertex, 2> vertices{};
};

inline Pair pair_at(const PetersenGraph& g, long long i) {
  const int c = reduce_mod(i, g.n());
  return {c, {g.outer(c), g.inner(c)}};
}

}  // namespace pdom
