#include "grec/graph.hpp"

#include <bit>

#include "grec/error.hpp"

namespace grec {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw ValidationError("graph: edge endpoint out of range");
  if (u == v) throw ValidationError("graph: loops are not allowed");
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t c = 0;
  for (auto w : rows_) c += static_cast<std::size_t>(std::popcount(w));
  return c / 2;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph Graph::induced(const std::vector<std::uint32_t>& vertices) const {
  Graph out(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    for (std::uint32_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

std::string Graph::edge_list() const {
  std::string out;
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g), w_(g.words()) {}

  CliqueResult run() {
    std::vector<std::uint64_t> all(w_, 0);
    for (std::uint32_t v = 0; v < g_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (g_.size() > 0) expand(all);
    return CliqueResult{best_.size(), best_, nodes_};
  }

 private:
  // Greedy colouring of P in descending vertex order; bound[i] is the
  // number of colours used by the members of P that are >= order[i].
  void colour_bounds(const std::vector<std::uint64_t>& p, std::vector<std::uint32_t>& order,
                     std::vector<std::uint32_t>& bound) {
    order.clear();
    for (std::size_t w = 0; w < w_; ++w) {
      std::uint64_t bits = p[w];
      while (bits != 0) {
        order.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    bound.assign(order.size(), 0);
    std::vector<std::vector<std::uint64_t>> classes;
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::uint32_t v = order[i];
      const std::uint64_t* nv = g_.row(v);
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (std::size_t w = 0; w < w_ && !clash; ++w) clash = (classes[c][w] & nv[w]) != 0;
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back(w_, 0);
      classes[c][v >> 6] |= std::uint64_t{1} << (v & 63);
      bound[i] = static_cast<std::uint32_t>(classes.size());
    }
  }

  void expand(const std::vector<std::uint64_t>& p) {
    ++nodes_;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> bound;
    colour_bounds(p, order, bound);
    std::vector<std::uint64_t> next(w_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::uint32_t v = order[i];
      const std::uint64_t* nv = g_.row(v);
      bool any = false;
      for (std::size_t w = 0; w < w_; ++w) {
        std::uint64_t above = 0;
        if (w > (v >> 6)) {
          above = ~std::uint64_t{0};
        } else if (w == (v >> 6)) {
          above = (v & 63) == 63 ? 0 : (~std::uint64_t{0} << ((v & 63) + 1));
        }
        next[w] = p[w] & nv[w] & above;
        any = any || next[w] != 0;
      }
      current_.push_back(v);
      if (!any) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t w_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint64_t nodes_ = 0;
};

void require_solver_size(const Graph& g) {
  if (g.size() > kMaxSolverVertices) {
    throw SizeLimitError("solver: " + std::to_string(g.size()) + " vertices exceed the limit " +
                         std::to_string(kMaxSolverVertices));
  }
}

void require_oracle_size(const Graph& g) {
  if (g.size() > kMaxOracleVertices) {
    throw SizeLimitError("oracle: " + std::to_string(g.size()) + " vertices exceed the limit " +
                         std::to_string(kMaxOracleVertices));
  }
}

// Among equal-size masks, the one holding the lowest element of the
// symmetric difference lists first.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

CliqueResult brute_force(const Graph& g, bool want_clique) {
  require_oracle_size(g);
  const std::size_t n = g.size();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v) == want_clique) nbr[u] |= 1U << v;
  // ok[S]: every pair in S is related (adjacent for cliques, non-adjacent
  // for independent sets).
  const std::uint32_t limit = 1U << n;
  std::vector<std::uint8_t> ok(limit, 0);
  ok[0] = 1;
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t s = 1; s < limit; ++s) {
    const std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    ok[s] = ok[rest] && (rest & ~nbr[low]) == 0;
    if (!ok[s]) continue;
    const int size = std::popcount(s);
    if (size > best_size || (size == best_size && mask_lex_less(s, best))) {
      best = s;
      best_size = size;
    }
  }
  CliqueResult r;
  r.size = static_cast<std::size_t>(best_size);
  for (std::uint32_t v = 0; v < n; ++v)
    if ((best >> v) & 1U) r.vertices.push_back(v);
  r.nodes = limit;
  return r;
}

}  // namespace

CliqueResult max_clique(const Graph& g) {
  require_solver_size(g);
  return CliqueSearch(g).run();
}

CliqueResult max_independent_set(const Graph& g) {
  require_solver_size(g);
  return CliqueSearch(g.complement()).run();
}

namespace oracle {

CliqueResult brute_force_clique(const Graph& g) { return brute_force(g, true); }
CliqueResult brute_force_independent_set(const Graph& g) { return brute_force(g, false); }

}  // namespace oracle

}  // namespace grec
