#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace ncg::oracle {

std::optional<U6nElement> free_reduce(std::string word, int n, int step_cap) {
  const std::string a_power(static_cast<std::size_t>(2 * n), 'a');
  for (int steps = 0; steps <= step_cap; ++steps) {
    if (auto p = word.find(a_power); p != std::string::npos) {
      word.erase(p, a_power.size());
    } else if (auto q = word.find("bbb"); q != std::string::npos) {
      word.erase(q, 3);
    } else if (auto r = word.find("ba"); r != std::string::npos) {
      word.replace(r, 2, "abb");
    } else {
      const auto i = static_cast<int>(std::count(word.begin(), word.end(), 'a'));
      const auto k = static_cast<int>(std::count(word.begin(), word.end(), 'b'));
      return U6nElement{i, k};
    }
  }
  return std::nullopt;
}

std::string spell(U6nElement e) {
  return std::string(static_cast<std::size_t>(e.a_exp), 'a') +
         std::string(static_cast<std::size_t>(e.b_exp), 'b');
}

std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::vector<std::vector<int>> dfs_longest_paths(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> best(n, std::vector<int>(n, -1));
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, int)> walk = [&](std::size_t s, std::size_t u,
                                                                int len) {
    best[s][u] = std::max(best[s][u], len);
    on_path[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!on_path[v] && g.adjacent(u, v)) walk(s, v, len + 1);
    }
    on_path[u] = false;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, 0);
  return best;
}

std::vector<std::uint64_t> independent_set_counts(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return counts;
}

bool resolves_by_definition(const std::vector<std::vector<int>>& d, std::uint64_t w) {
  const std::size_t n = d.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool differ = false;
      for (std::size_t x = 0; x < n && !differ; ++x) {
        if ((w >> x & 1) && d[u][x] != d[v][x]) differ = true;
      }
      if (!differ) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> resolving_set_counts(const Graph& g) {
  const auto d = floyd_distances(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (resolves_by_definition(d, s)) ++counts[static_cast<std::size_t>(std::popcount(s))];
  }
  return counts;
}

std::size_t brute_chromatic(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> color(n, 0);
    while (true) {
      bool proper = true;
      for (std::size_t u = 0; u < n && proper; ++u)
        for (std::size_t v = u + 1; v < n && proper; ++v)
          if (g.adjacent(u, v) && color[u] == color[v]) proper = false;
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

std::size_t brute_clique(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

}  // namespace ncg::oracle
