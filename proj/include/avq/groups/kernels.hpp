#pragma once

// Data-parallel inner loops of the group engine. Every kernel has an OpenMP
// version and a serial reference with identical results; tests compare the
// two and bench/ times them.

#include "avq/groups/element.hpp"

#include <span>

namespace avq::kernels {

/// out[i] = left[i] * right
void multiply_all_serial(std::span<const LinearElement> left, const LinearElement &right,
                         std::vector<LinearElement> &out);
void multiply_all_parallel(std::span<const LinearElement> left, const LinearElement &right,
                           std::vector<LinearElement> &out);

/// Indices (ascending) of elements g with g * x == x mod den.
std::vector<std::size_t> scan_stabilizer_serial(std::span<const LinearElement> elements,
                                                std::span<const std::int64_t> x, std::int64_t den);
std::vector<std::size_t> scan_stabilizer_parallel(std::span<const LinearElement> elements,
                                                  std::span<const std::int64_t> x, std::int64_t den);

/// Indices (ascending) of elements with rank(g - I) == codim.
std::vector<std::size_t> scan_fixed_codim_serial(std::span<const LinearElement> elements,
                                                 std::size_t codim);
std::vector<std::size_t> scan_fixed_codim_parallel(std::span<const LinearElement> elements,
                                                   std::size_t codim);

/// Process-wide switch used by the library; defaults to parallel.
void set_parallel(bool enabled);
bool parallel_enabled();
/// Worker count for OpenMP regions (0 keeps the runtime default).
void set_jobs(int jobs);

}  // namespace avq::kernels
