#include "hyfac/graph_factorization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyfac {

GraphConditionReport check_graph_conditions(int n, Count lambda, const std::vector<Count>& r) {
  GraphConditionReport rep;
  auto fail = [&](std::string what) {
    rep.passed = false;
    rep.violations.push_back(std::move(what));
  };
  if (n < 2) fail("n must be at least 2");
  if (lambda < 1) fail("lambda must be positive");
  if (r.empty()) fail("r must be nonempty");
  Count sum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::ostringstream os;
    if (r[i] < 1) {
      os << "r_" << i + 1 << " = " << r[i] << " is not positive";
      fail(os.str());
    } else if ((r[i] * n) % 2 != 0) {
      os << "r_" << i + 1 << " * n = " << r[i] * n << " is odd";
      fail(os.str());
    }
    sum += r[i];
  }
  if (n >= 2 && sum != lambda * (n - 1)) {
    std::ostringstream os;
    os << "sum of r_i = " << sum << " but lambda*(n-1) = " << lambda * (n - 1);
    fail(os.str());
  }
  return rep;
}

GraphConditionError::GraphConditionError(GraphConditionReport report)
    : std::invalid_argument([&] {
        std::string msg = "graph factorization conditions fail:";
        for (const auto& v : report.violations) msg += " " + v + ";";
        return msg;
      }()),
      report_(std::move(report)) {}

std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("round robin needs even n >= 2");
  const int rim = n - 1; // vertices 0..n-2 on the circle, n-1 at the hub
  std::vector<std::vector<std::pair<int, int>>> rounds;
  for (int j = 0; j < rim; ++j) {
    std::vector<std::pair<int, int>> m;
    m.emplace_back(j, n - 1);
    for (int t = 1; t <= (n - 2) / 2; ++t) {
      int a = (j + t) % rim;
      int b = ((j - t) % rim + rim) % rim;
      m.emplace_back(std::min(a, b), std::max(a, b));
    }
    rounds.push_back(std::move(m));
  }
  return rounds;
}

std::vector<std::vector<int>> walecki_cycles(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("Walecki construction needs odd n >= 3");
  const int rim = n - 1; // even; vertex n-1 is the hub
  std::vector<std::vector<int>> cycles;
  for (int j = 0; j < rim / 2; ++j) {
    std::vector<int> c{n - 1};
    // zigzag j, j+1, j-1, j+2, j-2, ..., j+rim/2
    c.push_back(j);
    for (int t = 1; t <= rim / 2; ++t) {
      c.push_back((j + t) % rim);
      if (t < rim / 2) c.push_back(((j - t) % rim + rim) % rim);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

GraphColoring factorize_complete_graph(int n, Count lambda, const std::vector<Count>& r) {
  auto rep = check_graph_conditions(n, lambda, r);
  if (!rep.passed) throw GraphConditionError(std::move(rep));

  GraphColoring gc{n, lambda, static_cast<int>(r.size()), {}};
  gc.edges.reserve(static_cast<std::size_t>(lambda) * n * (n - 1) / 2);

  // Factors are handed out copy-major over the fixed decomposition; colors
  // take consecutive blocks in ascending order.
  std::vector<int> owner;
  const bool even = n % 2 == 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    owner.insert(owner.end(), static_cast<std::size_t>(even ? r[i] : r[i] / 2),
                 static_cast<int>(i));

  auto emit = [&](int a, int b, int copy, int color) {
    gc.edges.push_back({std::min(a, b), std::max(a, b), copy, color});
  };

  std::size_t slot = 0;
  if (even) {
    const auto rounds = round_robin_matchings(n);
    for (int copy = 0; copy < lambda; ++copy)
      for (const auto& matching : rounds) {
        for (auto [a, b] : matching) emit(a, b, copy, owner.at(slot));
        ++slot;
      }
  } else {
    const auto cycles = walecki_cycles(n);
    for (int copy = 0; copy < lambda; ++copy)
      for (const auto& cyc : cycles) {
        for (std::size_t p = 0; p < cyc.size(); ++p)
          emit(cyc[p], cyc[(p + 1) % cyc.size()], copy, owner.at(slot));
        ++slot;
      }
  }
  if (slot != owner.size()) throw InternalError("factor blocks do not cover the decomposition");
  return gc;
}

} // namespace hyfac
