#include "charsub/enumerate.hpp"

#include <algorithm>
#include <string>

#include "charsub/errors.hpp"

namespace charsub {

std::vector<Gf2Vector> enumerate_vectors(const Subspace& s, std::size_t cap_log2) {
  if (s.dim() > cap_log2 || s.dim() >= 63) {
    const std::uint64_t required =
        s.dim() >= 64 ? UINT64_MAX : (std::uint64_t{1} << s.dim());
    throw CapExceeded("enumerate_vectors: subspace of dimension " + std::to_string(s.dim()) +
                          " exceeds cap 2^" + std::to_string(cap_log2),
                      required, std::uint64_t{1} << std::min<std::size_t>(cap_log2, 63));
  }
  const std::size_t count = std::size_t{1} << s.dim();
  std::vector<Gf2Vector> out;
  out.reserve(count);
  out.emplace_back(s.ambient_dim());
  for (std::size_t mask = 1; mask < count; ++mask) {
    // mask differs from mask & (mask - 1) in its lowest bit only.
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    out.push_back(out[mask & (mask - 1)] + s.basis()[low]);
  }
  return out;
}

std::uint64_t gaussian_binomial2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // [n choose k]_2 via the q-Pascal rule [n,k] = [n-1,k-1] + 2^k [n-1,k].
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      row[j] = row[j - 1] + (std::uint64_t{1} << j) * row[j];
    }
  }
  return row[k];
}

std::uint64_t subspace_count(std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial2(n, k);
  return total;
}

namespace {

// Returns false when the visitor asked to stop.
bool walk_shape(std::size_t n, const std::vector<std::size_t>& pivots,
                const std::function<bool(const Subspace&)>& visit) {
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  // Free slots (row, column): column after the row's pivot and not a pivot.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = pivots[i] + 1; c < n; ++c) {
      if (!is_pivot[c]) slots.emplace_back(i, c);
    }
  }
  const std::uint64_t combos = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::vector<Gf2Vector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(Gf2Vector::unit(n, pivots[i]));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1U) rows[slots[s].first].set(slots[s].second);
    }
    if (!visit(Subspace::from_canonical(n, std::move(rows)))) return false;
  }
  return true;
}

}  // namespace

void for_each_subspace(std::size_t n, const std::function<bool(const Subspace&)>& visit,
                       std::size_t max_dim) {
  if (n > max_dim) {
    throw CapExceeded("enumerate_subspaces: n = " + std::to_string(n) + " exceeds max_dim " +
                          std::to_string(max_dim),
                      n < 20 ? subspace_count(n) : UINT64_MAX, subspace_count(max_dim));
  }
  const std::uint64_t total = subspace_count(n);
  if (total > kEnumerationItemCeiling) {
    throw CapExceeded("enumerate_subspaces: " + std::to_string(total) + " subspaces exceed ceiling",
                      total, kEnumerationItemCeiling);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot sets of size k in lexicographic order.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      if (!walk_shape(n, pivots, visit)) return;
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t max_dim) {
  std::vector<Subspace> out;
  for_each_subspace(
      n,
      [&](const Subspace& s) {
        out.push_back(s);
        return true;
      },
      max_dim);
  return out;
}

}  // namespace charsub
