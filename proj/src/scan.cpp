#include <algorithm>
#include <atomic>
#include <thread>

#include "mpg/census.hpp"
#include "mpg/error.hpp"
#include "mpg/witness.hpp"

namespace mpg {

namespace {

std::int64_t factorial(int m) {
  std::int64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

struct Partial {
  std::vector<ScanRow> rows;
  std::vector<ScanViolation> violations;
  std::int64_t witness_runs = 0;
  std::int64_t zhang_ok = 0;
};

void scan_one(int m, std::int64_t rank, Partial& out) {
  const auto g = Mpg::validate(m, unrank_permutation(m, rank));
  const auto c4 = enumerate_m_c4(g);
  const auto p10 = enumerate_m_p10(g);
  ScanRow row{rank, static_cast<int>(c4.size()), static_cast<int>(p10.size()), 0};

  auto violate = [&](int edge, std::string what) {
    out.violations.push_back({rank, g.id(), edge, std::move(what)});
    ++row.violations;
  };

  if (check_zhang(row.c4_count, row.p10_count).ok) {
    ++out.zhang_ok;
  } else {
    violate(-1, "neither two M-C4s nor an M-P10");
  }

  for (int e = 0; e < m; ++e) {
    const bool eligible =
        std::all_of(c4.begin(), c4.end(), [&](const FourCycle& c) { return c.contains(e); });
    if (!eligible) continue;
    ++out.witness_runs;
    try {
      const auto result = find_p10_through(g, e);
      const auto& w = result.witness;
      if (!w.contains(e) || !is_m_p10(g, w.edges)) {
        violate(e, "unsound witness");
      } else if (!std::binary_search(p10.begin(), p10.end(), w)) {
        violate(e, "witness missing from census");
      } else if (replay(g, e, result.trace) != w) {
        violate(e, "trace replay mismatch");
      }
    } catch (const Error& err) {
      violate(e, std::string(code_name(err.code())) + ": " + err.what());
    }
  }
  out.rows.push_back(row);
}

}  // namespace

std::vector<int> unrank_permutation(int m, std::int64_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(pool.size());
  for (int left = m; left > 0; --left) {
    const std::int64_t block = factorial(left - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

ScanReport exhaustive_scan(int m, int jobs) {
  if (m < 3 || m > kMaxScanM) {
    throw Error(ErrorCode::OutOfScanRange, "scan supports 3 <= m <= 8",
                {{"m", m}, {"min", 3}, {"max", kMaxScanM}});
  }
  const std::int64_t total = factorial(m);
  constexpr std::int64_t kChunk = 256;
  const auto chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  std::vector<Partial> parts(chunks);

  auto run_chunk = [&](std::size_t c) {
    const std::int64_t begin = static_cast<std::int64_t>(c) * kChunk;
    const std::int64_t end = std::min(total, begin + kChunk);
    for (std::int64_t r = begin; r < end; ++r) scan_one(m, r, parts[c]);
  };

  const int workers = std::clamp(jobs, 1, static_cast<int>(chunks));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  ScanReport report;
  report.m = m;
  report.instances = total;
  for (auto& p : parts) {
    report.witness_runs += p.witness_runs;
    report.zhang_ok += p.zhang_ok;
    report.rows.insert(report.rows.end(), p.rows.begin(), p.rows.end());
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  return report;
}

}  // namespace mpg
