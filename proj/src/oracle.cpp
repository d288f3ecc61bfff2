// Copyright 2026 The relchoice Authors
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

#include "relchoice/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace relchoice::oracle {
namespace {

using Matrix = std::vector<std::vector<bool>>;
using Mask = std::uint32_t;

void check_budget(const Relation& r, std::size_t limit, const char* what) {
  // Subsets are enumerated as 32-bit masks.
  limit = std::min<std::size_t>(limit, 30);
  if (r.size() > limit) {
    throw BudgetExceeded(std::string(what) + " is limited to " +
                         std::to_string(limit) + " elements");
  }
}

Matrix to_matrix(const Relation& r) {
  const std::size_t n = r.size();
  Matrix m(n, std::vector<bool>(n, false));
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) m[x][y] = r.has(x, y);
  }
  return m;
}

Matrix closure_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix result = m;  // paths of length 1
  Matrix frontier = m;
  for (std::size_t k = 2; k <= n; ++k) {
    // frontier becomes the exactly-k-step relation.
    Matrix next(n, std::vector<bool>(n, false));
    for (Index x = 0; x < n; ++x) {
      for (Index z = 0; z < n; ++z) {
        if (!frontier[x][z]) continue;
        for (Index y = 0; y < n; ++y) {
          if (m[z][y]) next[x][y] = true;
        }
      }
    }
    frontier = std::move(next);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (frontier[x][y]) result[x][y] = true;
      }
    }
  }
  return result;
}

bool in_mask(Mask mask, Index i) { return (mask >> i) & 1U; }

IndexSet mask_to_set(Mask mask, std::size_t n) {
  IndexSet out;
  for (Index i = 0; i < n; ++i) {
    if (in_mask(mask, i)) out.push_back(i);
  }
  return out;
}

bool undominated(const Matrix& m, Mask mask) {
  const std::size_t n = m.size();
  for (Index x = 0; x < n; ++x) {
    if (!in_mask(mask, x)) continue;
    for (Index y = 0; y < n; ++y) {
      if (!in_mask(mask, y) && m[y][x]) return false;
    }
  }
  return true;
}

std::vector<IndexSet> minimal_undominated_of(const Matrix& m) {
  const std::size_t n = m.size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> found;
  for (Mask mask = 1; mask <= full && mask != 0; ++mask) {
    if (undominated(m, mask)) found.push_back(mask);
  }
  std::vector<IndexSet> out;
  for (Mask a : found) {
    bool minimal = true;
    for (Mask b : found) {
      if (b != a && (b & a) == b) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(mask_to_set(a, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix asymmetric_matrix(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix p(n, std::vector<bool>(n, false));
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) p[x][y] = m[x][y] && !m[y][x];
  }
  return p;
}

void dfs(const Relation& r, Index x, std::vector<bool>& seen) {
  if (seen[x]) return;
  seen[x] = true;
  for (Index y = 0; y < r.size(); ++y) {
    if (r.has(x, y)) dfs(r, y, seen);
  }
}

}  // namespace

Relation brute_closure(const Relation& r, const OracleBudget& budget) {
  check_budget(r, budget.max_subset_n, "brute closure");
  const Matrix c = closure_matrix(to_matrix(r));
  std::vector<IndexPair> pairs;
  for (Index x = 0; x < r.size(); ++x) {
    for (Index y = 0; y < r.size(); ++y) {
      if (c[x][y]) pairs.emplace_back(x, y);
    }
  }
  return Relation(r.universe(), pairs);
}

Relation brute_asymmetric_part(const Relation& r) {
  std::vector<IndexPair> pairs;
  for (Index x = 0; x < r.size(); ++x) {
    for (Index y = 0; y < r.size(); ++y) {
      if (r.has(x, y) && !r.has(y, x)) pairs.emplace_back(x, y);
    }
  }
  return Relation(r.universe(), pairs);
}

std::vector<IndexSet> brute_minimal_undominated(const Relation& r,
                                                const OracleBudget& budget) {
  check_budget(r, budget.max_subset_n, "subset enumeration");
  return minimal_undominated_of(to_matrix(r));
}

std::vector<IndexSet> brute_chains(const Relation& r,
                                   const OracleBudget& budget) {
  check_budget(r, budget.max_chain_n, "chain enumeration");
  const std::size_t n = r.size();
  std::vector<IndexSet> out;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    bool chain = true;
    for (Index x = 0; x < n && chain; ++x) {
      for (Index y = x + 1; y < n && chain; ++y) {
        if (in_mask(mask, x) && in_mask(mask, y)) {
          chain = r.has(x, y) || r.has(y, x);
        }
      }
    }
    if (chain) out.push_back(mask_to_set(mask, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> brute_top_cycles(const Relation& r,
                                       const OracleBudget& budget) {
  check_budget(r, budget.max_subset_n, "subset enumeration");
  const std::size_t n = r.size();
  const Matrix m = to_matrix(r);
  const Matrix c = closure_matrix(m);
  std::vector<IndexSet> out;
  for (Mask mask = 1; mask < (Mask{1} << n); ++mask) {
    if (!undominated(m, mask)) continue;
    const IndexSet set = mask_to_set(mask, n);
    bool cycle = true;
    if (set.size() > 1) {
      for (Index x : set) {
        for (Index y : set) {
          if (!c[x][y] || !c[y][x]) cycle = false;
        }
      }
    }
    if (cycle) out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet brute_schwartz(const Relation& r, bool strict,
                        const OracleBudget& budget) {
  check_budget(r, budget.max_subset_n, "subset enumeration");
  Matrix m = to_matrix(r);
  if (strict) m = asymmetric_matrix(m);
  IndexSet out;
  for (const IndexSet& set : minimal_undominated_of(m)) {
    out.insert(out.end(), set.begin(), set.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet brute_maximal(const Relation& r) {
  IndexSet out;
  for (Index x = 0; x < r.size(); ++x) {
    bool maximal = true;
    for (Index y = 0; y < r.size(); ++y) {
      if (r.has(y, x) && !r.has(x, y)) maximal = false;
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<IndexSet> brute_unbounded_chains(const Relation& r,
                                             const OracleBudget& budget) {
  std::vector<IndexSet> out;
  for (const IndexSet& chain : brute_chains(r, budget)) {
    bool bounded = false;
    for (Index x = 0; x < r.size() && !bounded; ++x) {
      bool bounds_all = true;
      for (Index y : chain) {
        if (!r.has(x, y)) bounds_all = false;
      }
      bounded = bounds_all;
    }
    if (!bounded) out.push_back(chain);
  }
  return out;
}

std::size_t brute_class_count(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<bool>> reach(n);
  for (Index x = 0; x < n; ++x) {
    reach[x].assign(n, false);
    dfs(r, x, reach[x]);
  }
  std::vector<bool> assigned(n, false);
  std::size_t count = 0;
  for (Index x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ++count;
    for (Index y = x; y < n; ++y) {
      if (reach[x][y] && reach[y][x]) assigned[y] = true;
    }
  }
  return count;
}

}  // namespace relchoice::oracle
