#include "mpg/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "mpg/crossing.hpp"
#include "mpg/error.hpp"
#include "mpg/kernels.hpp"

namespace mpg {

namespace {

// M-P10s whose smallest edge is `first`.
std::vector<PetersenWitness> p10_with_first(const Mpg& g, int first) {
  const int m = g.m();
  const auto& sigma = g.sigma();
  std::vector<PetersenWitness> out;
  std::array<int, 5> x{first, 0, 0, 0, 0};
  for (x[1] = first + 1; x[1] < m; ++x[1]) {
    for (x[2] = x[1] + 1; x[2] < m; ++x[2]) {
      for (x[3] = x[2] + 1; x[3] < m; ++x[3]) {
        for (x[4] = x[3] + 1; x[4] < m; ++x[4]) {
          if (kernels::girth_at_least_5(kernels::five_edge_masks(sigma, x))) {
            out.push_back(PetersenWitness{x});
          }
        }
      }
    }
  }
  return out;
}

bool p10_set(const Mpg& g, std::array<int, 5> x) {
  std::sort(x.begin(), x.end());
  return kernels::girth_at_least_5(kernels::five_edge_masks(g.sigma(), x));
}

}  // namespace

std::vector<PetersenWitness> enumerate_m_p10(const Mpg& g, int jobs) {
  const int m = g.m();
  if (m < 5) return {};
  const int tasks = m - 4;
  std::vector<std::vector<PetersenWitness>> parts(static_cast<std::size_t>(tasks));
  const int workers = std::clamp(jobs, 1, tasks);
  if (workers == 1) {
    for (int f = 0; f < tasks; ++f) parts[static_cast<std::size_t>(f)] = p10_with_first(g, f);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int f = next++; f < tasks; f = next++) {
          parts[static_cast<std::size_t>(f)] = p10_with_first(g, f);
        }
      });
    }
  }
  std::vector<PetersenWitness> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<int> count_per_edge(const Mpg& g, std::span<const PetersenWitness> witnesses) {
  std::vector<int> count(static_cast<std::size_t>(g.m()), 0);
  for (const auto& w : witnesses) {
    for (int e : w.edges) ++count[static_cast<std::size_t>(e)];
  }
  return count;
}

std::vector<int> count_per_edge(const Mpg& g) {
  const auto w = enumerate_m_p10(g);
  return count_per_edge(g, w);
}

ZhangVerdict check_zhang(int c4_count, int p10_count) {
  return {c4_count >= 2 || p10_count >= 1, c4_count, p10_count};
}

ZhangVerdict check_zhang(const Mpg& g) {
  return check_zhang(static_cast<int>(enumerate_m_c4(g).size()),
                     static_cast<int>(enumerate_m_p10(g).size()));
}

LowerBoundVerdict check_lower_bound(const Mpg& g, int c4_count, int p10_count) {
  LowerBoundVerdict v;
  v.n = g.order();
  v.c4_count = c4_count;
  v.p10_count = p10_count;
  v.bound = v.n / 2 - 4;
  v.applicable = v.n >= 40 && c4_count == 0;
  v.ok = !v.applicable || p10_count >= v.bound;
  return v;
}

LowerBoundVerdict check_lower_bound(const Mpg& g) {
  return check_lower_bound(g, static_cast<int>(enumerate_m_c4(g).size()),
                           static_cast<int>(enumerate_m_p10(g).size()));
}

ReplaceVerdict check_replace(const Mpg& g, int a, int b) {
  const int m = g.m();
  if (a == b || a < 0 || b < 0 || a >= m || b >= m) {
    throw Error(ErrorCode::IndexOutOfRange, "need two distinct matching edges",
                {{"a", a}, {"b", b}, {"m", m}});
  }
  ReplaceVerdict v;
  for (const auto& w : enumerate_m_p10(g)) {
    if (w.contains(a) && w.contains(b)) {
      v.ok = true;
      v.branch = ReplaceBranch::SharedWitness;
      v.shared = w;
      return v;
    }
  }
  std::vector<int> rest;
  for (int i = 0; i < m; ++i) {
    if (i != a && i != b) rest.push_back(i);
  }
  const auto n = rest.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      for (std::size_t r = q + 1; r < n; ++r) {
        for (std::size_t s = r + 1; s < n; ++s) {
          const std::array<int, 4> f{rest[p], rest[q], rest[r], rest[s]};
          const bool with_a = p10_set(g, {f[0], f[1], f[2], f[3], a});
          const bool with_b = p10_set(g, {f[0], f[1], f[2], f[3], b});
          if (with_a != with_b) {
            v.ok = false;
            v.branch = ReplaceBranch::None;
            v.counterexample = f;
            return v;
          }
        }
      }
    }
  }
  v.ok = true;
  v.branch = ReplaceBranch::SwapEquivalence;
  return v;
}

RedrawingVerdict check_redrawing(const Mpg& g, int a, int b) {
  const int m = g.m();
  if (a == b || a < 0 || b < 0 || a >= m || b >= m) {
    throw Error(ErrorCode::IndexOutOfRange, "need two distinct anchors",
                {{"a", a}, {"b", b}, {"m", m}});
  }
  const auto ha = build_crossing_graph(g, a);
  const auto hb = build_crossing_graph(g, b);
  for (int x = 0; x < m; ++x) {
    if (x == a || x == b) continue;
    if (hb.adjacent(a, x) != ha.adjacent(b, x)) return {false, 1, x, -1};
  }
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      if (x == a || x == b || y == a || y == b) continue;
      const int hits = static_cast<int>(ha.adjacent(b, x)) + static_cast<int>(ha.adjacent(b, y)) +
                       static_cast<int>(ha.adjacent(x, y));
      if (hb.adjacent(x, y) != (hits % 2 == 1)) return {false, 2, x, y};
    }
  }
  return {};
}

CensusReport census(const Mpg& g, int jobs) {
  CensusReport r;
  r.instance_id = g.id();
  r.m = g.m();
  r.c4 = enumerate_m_c4(g);
  r.p10 = enumerate_m_p10(g, jobs);
  r.per_edge = count_per_edge(g, r.p10);
  const int c4n = static_cast<int>(r.c4.size());
  const int p10n = static_cast<int>(r.p10.size());
  r.zhang_ok = check_zhang(c4n, p10n).ok;
  const auto lb = check_lower_bound(g, c4n, p10n);
  r.lower_bound_applicable = lb.applicable;
  r.lower_bound_ok = lb.ok;
  return r;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // rejection keeps the draw unbiased
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

Mpg random_instance(int m, std::uint64_t seed, bool require_c4_free, std::int64_t max_attempts) {
  if (m < 3) throw Error(ErrorCode::TooSmall, "m must be at least 3", {{"m", m}});
  SplitMix64 rng(seed);
  std::vector<int> sigma(static_cast<std::size_t>(m));
  const std::int64_t limit = require_c4_free ? std::max<std::int64_t>(max_attempts, 1) : 1;
  for (std::int64_t attempt = 0; attempt < limit; ++attempt) {
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = sigma.size() - 1; i > 0; --i) {
      std::swap(sigma[i], sigma[static_cast<std::size_t>(rng.below(i + 1))]);
    }
    auto g = Mpg::validate(m, sigma);
    if (!require_c4_free || enumerate_m_c4(g).empty()) return g;
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no C4-free instance found",
              {{"m", m}, {"seed", seed}, {"attempts", limit}});
}

}  // namespace mpg
