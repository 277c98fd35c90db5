#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "polyherm/complex_point.hpp"

namespace polyherm {

// Worker cap used by every parallel loop; 0 restores the default
// (std::thread::hardware_concurrency, at least 1).
void set_max_threads(int n);
int max_threads() noexcept;

// Runs body(i) for i in [0, count) on up to max_threads() workers. The split
// is by contiguous blocks; bodies must write to disjoint outputs. The first
// exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Pairwise summation with a fixed recursion shape (depends only on the
// length), so the result is independent of how the values were produced.
double pairwise_sum(std::span<const double> v);
cplx pairwise_sum(std::span<const cplx> v);

}  // namespace polyherm
