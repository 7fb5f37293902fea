#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "finconv/exponentials.hpp"
#include "finconv/spaces.hpp"

namespace finconv {

enum class SpaceFilter { All, Topological };

inline constexpr std::size_t kEnumerateBound = 5;
inline constexpr std::size_t kEnumerateUpToIsoBound = 4;

/// 2^(n² − n): reflexive relations on n labelled points.
std::uint64_t labeled_space_count(std::size_t n);

/// Bit k of `index` is the k-th off-diagonal pair in row-major order.
/// Points are labelled "0".."n-1".
PseudoSpace space_from_index(std::size_t n, std::uint64_t index);
std::uint64_t space_index(const PseudoSpace& space);
/// Least index over all relabellings of the points.
std::uint64_t canonical_index(const PseudoSpace& space);

/// Visits every structure on n points in index order (only the least index
/// of each isomorphism class when up_to_iso). Return false to stop.
/// Throws PreconditionError when n exceeds `bound` (defaults: 5, or 4 up to
/// isomorphism).
void for_each_space(std::size_t n, SpaceFilter filter, bool up_to_iso,
                    const std::function<bool(const PseudoSpace&)>& visit, std::optional<std::size_t> bound = {});
std::vector<PseudoSpace> enumerate_spaces(std::size_t n, SpaceFilter filter, bool up_to_iso,
                                          std::optional<std::size_t> bound = {});
std::uint64_t count_spaces(std::size_t n, SpaceFilter filter, bool up_to_iso, std::optional<std::size_t> bound = {});

/// All functions [n] → [m] in lexicographic order, as assignment tables.
std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m);
std::vector<std::vector<std::size_t>> all_surjections(std::size_t n, std::size_t m);

// Random instances. Every draw goes through `uniform`, so streams do not
// depend on the standard library's distribution implementations.
using Rng = std::mt19937_64;

/// Generator for instance `index` of a run seeded by `seed`.
Rng instance_rng(std::uint64_t seed, std::uint64_t index);
/// Uniform on [0, n); n > 0.
std::size_t uniform(Rng& rng, std::size_t n);
/// True with probability num/den.
bool chance(Rng& rng, std::size_t num, std::size_t den);
void shuffle(Rng& rng, std::vector<std::size_t>& v);

/// Random reflexive relation; each off-diagonal edge with a density drawn
/// per call from {1/8, ..., 6/8}.
PseudoSpace random_space(Rng& rng, std::size_t n);
/// Closure of a sparse random relation.
PseudoSpace random_topology(Rng& rng, std::size_t n);
std::vector<std::size_t> random_function(Rng& rng, std::size_t n, std::size_t m);
/// Requires n ≥ m (or n = m = 0).
std::vector<std::size_t> random_surjection(Rng& rng, std::size_t n, std::size_t m);
/// The first continuous map found with randomly ordered candidate values.
/// Nullopt only when no continuous map exists (X nonempty, Y empty).
std::optional<Assignment> random_continuous_map(Rng& rng, const PseudoSpace& x, const PseudoSpace& y);
/// A random subset of [n], each member with probability 1/2.
PointSet random_subset(Rng& rng, std::size_t n);

}  // namespace finconv
