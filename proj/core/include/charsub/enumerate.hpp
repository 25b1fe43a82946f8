#pragma once

// Exhaustive enumeration of subspace members and of all subspaces of
// GF(2)^n. These are oracle utilities: they refuse requests above a cap
// instead of silently running for hours.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "charsub/gf2.hpp"

namespace charsub {

inline constexpr std::size_t kDefaultVectorCapLog2 = 24;
inline constexpr std::size_t kDefaultSubspaceMaxDim = 8;
/// Hard ceiling on the number of items any enumeration will produce.
inline constexpr std::uint64_t kEnumerationItemCeiling = std::uint64_t{1} << 24;

/// All 2^dim(s) members. Member i is the sum of the basis rows selected by
/// the bits of i, so the order is deterministic. Throws CapExceeded when
/// dim(s) > cap_log2.
std::vector<Gf2Vector> enumerate_vectors(const Subspace& s,
                                         std::size_t cap_log2 = kDefaultVectorCapLog2);

/// Number of k-dimensional subspaces of GF(2)^n (Gaussian binomial at q = 2).
std::uint64_t gaussian_binomial2(std::size_t n, std::size_t k);
/// Total number of subspaces of GF(2)^n.
std::uint64_t subspace_count(std::size_t n);

/// Visits every subspace of GF(2)^n exactly once by walking RREF shapes:
/// dimension ascending, pivot sets in lexicographic order, then the free
/// entries as a binary counter. Returning false from the visitor stops the
/// walk. Throws CapExceeded when n > max_dim or the count exceeds the
/// enumeration ceiling.
void for_each_subspace(std::size_t n, const std::function<bool(const Subspace&)>& visit,
                       std::size_t max_dim = kDefaultSubspaceMaxDim);

std::vector<Subspace> enumerate_subspaces(std::size_t n,
                                          std::size_t max_dim = kDefaultSubspaceMaxDim);

}  // namespace charsub
