#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "bcfwt/bicomplex.hpp"

namespace bcfwt {

/// Worker count: BCFWT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(begin, end) over a static partition of [0, n). Results must not
/// depend on the partition; callers write into disjoint slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// Pairwise (cascade) summation with a fixed tree, so the result depends only
/// on the input order.
double pairwise_sum(std::span<const double> values);
cplx pairwise_sum(std::span<const cplx> values);

}  // namespace bcfwt
