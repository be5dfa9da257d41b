#include "tsf/combinatorics.hpp"

#include <stdexcept>

namespace tsf {

Integer binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int r) {
  if (r < 0) return {};
  if (n == 0) return r == 0 ? std::vector<MultiIndex>{MultiIndex{}}
                            : std::vector<MultiIndex>{};
  if (n < 0) throw std::invalid_argument("enumerate_multi_indices: n < 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // Place `rem` units into coordinates i..n-1, largest-first in coordinate i.
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n - 1) {
      cur[i] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, rem - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, r);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices_up_to(int n, int r) {
  std::vector<MultiIndex> out;
  for (int j = 0; j <= r; ++j) {
    auto layer = enumerate_multi_indices(n, j);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<IndexSet> enumerate_index_sets(int n, int k) {
  if (k < 0 || k > n) return {};
  std::vector<IndexSet> out;
  IndexSet cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int i = next; i + need - 1 <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace tsf
