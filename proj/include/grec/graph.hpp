#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace grec {

inline constexpr std::size_t kMaxSolverVertices = 4096;
inline constexpr std::size_t kMaxOracleVertices = 20;

/// Simple undirected loop-free graph on vertices 0..n-1 stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::uint32_t u, std::uint32_t v);
  bool adjacent(std::uint32_t u, std::uint32_t v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  const std::uint64_t* row(std::uint32_t v) const noexcept { return rows_.data() + v * words_; }
  std::size_t edge_count() const noexcept;

  Graph complement() const;
  /// Subgraph induced on `vertices` (ascending); vertex i of the result is vertices[i].
  Graph induced(const std::vector<std::uint32_t>& vertices) const;

  /// "u v" per edge with u < v, ascending, each line newline-terminated.
  std::string edge_list() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct CliqueResult {
  std::size_t size = 0;
  /// Lexicographically least maximum witness, ascending.
  std::vector<std::uint32_t> vertices;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique: branch and bound over bit rows in fixed index
/// order, pruned by greedy colouring bounds. The first maximum clique met
/// in index-order DFS is the lexicographically least one.
/// Throws SizeLimitError past kMaxSolverVertices.
CliqueResult max_clique(const Graph& g);
/// Maximum independent set, as a maximum clique of the complement.
CliqueResult max_independent_set(const Graph& g);

namespace oracle {

/// Subset-enumeration reference solvers (at most kMaxOracleVertices
/// vertices). Same lexicographic witness contract as the exact solver.
CliqueResult brute_force_clique(const Graph& g);
CliqueResult brute_force_independent_set(const Graph& g);

}  // namespace oracle

}  // namespace grec
