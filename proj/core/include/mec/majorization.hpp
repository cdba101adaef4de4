#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mec/distribution.hpp"
#include "mec/tolerance.hpp"

namespace mec {

inline constexpr std::size_t kDefaultHalfCap = std::size_t{1} << 20;

/// True iff a ⪯ b, i.e. `a` is majorized by `b`: every prefix sum of `a` is
/// at most the matching prefix sum of `b` (plus `slack`). The shorter input
/// is zero-padded.
bool majorizes(const Distribution& a, const Distribution& b,
               double slack = kComparisonTol);

/// Greatest lower bound p ∧ q in the majorization lattice.
///
/// Prefix sums of the result are the pointwise minima of the inputs' prefix
/// sums. Inputs of different length are zero-padded and trailing zeros are
/// kept. Roundoff negatives are clamped to zero with the deficit carried
/// into the next component. The result has identity perm.
Distribution glb(const Distribution& p, const Distribution& q);

/// Left fold of glb. Throws kEmpty for an empty list.
Distribution glb_many(std::span<const Distribution> ds);

/// (p1/2, p1/2, ..., pn/2, pn/2). Zero components are duplicated as well.
Distribution half(const Distribution& p);

/// `times`-fold application of half. Throws kSizeCap when the result would
/// exceed `cap` components.
Distribution half_iter(const Distribution& p, std::size_t times,
                       std::size_t cap = kDefaultHalfCap);

namespace detail {

/// glb on raw sorted mass vectors; the result has max(|p|, |q|) entries.
std::vector<double> glb_masses(std::span<const double> p, std::span<const double> q);

}  // namespace detail

}  // namespace mec
