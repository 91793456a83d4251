#include "avq/groups/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace avq::kernels {

namespace {
std::atomic<bool> g_parallel{true};

// Cheap necessary condition on the trace before the exact rank: a finite
// order C-linear element has eigenvalue pairs on the unit circle, so the
// trace of g - I is bounded below by -2 per moved complex dimension.
bool trace_admits_codim(const LinearElement &g, std::size_t codim) {
  const auto d = static_cast<std::int64_t>(g.dim());
  const std::int64_t t = g.trace();
  const auto c = static_cast<std::int64_t>(codim);
  return t >= d - 2 * c && t <= d - 1;
}
}  // namespace

void set_parallel(bool enabled) { g_parallel = enabled; }
bool parallel_enabled() { return g_parallel; }

void set_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0)
    omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

void multiply_all_serial(std::span<const LinearElement> left, const LinearElement &right,
                         std::vector<LinearElement> &out) {
  out.resize(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    out[i] = left[i] * right;
}

void multiply_all_parallel(std::span<const LinearElement> left, const LinearElement &right,
                           std::vector<LinearElement> &out) {
  out.resize(left.size());
  const auto n = static_cast<std::ptrdiff_t>(left.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = left[i] * right;
}

std::vector<std::size_t> scan_stabilizer_serial(std::span<const LinearElement> elements,
                                                std::span<const std::int64_t> x, std::int64_t den) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].fixes_mod(x.data(), den))
      hits.push_back(i);
  return hits;
}

std::vector<std::size_t> scan_stabilizer_parallel(std::span<const LinearElement> elements,
                                                  std::span<const std::int64_t> x, std::int64_t den) {
  std::vector<char> flag(elements.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(elements.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    flag[i] = elements[i].fixes_mod(x.data(), den) ? 1 : 0;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i])
      hits.push_back(i);
  return hits;
}

std::vector<std::size_t> scan_fixed_codim_serial(std::span<const LinearElement> elements,
                                                 std::size_t codim) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (trace_admits_codim(elements[i], codim) && elements[i].fixed_codim() == codim)
      hits.push_back(i);
  return hits;
}

std::vector<std::size_t> scan_fixed_codim_parallel(std::span<const LinearElement> elements,
                                                   std::size_t codim) {
  std::vector<char> flag(elements.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(elements.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    flag[i] = (trace_admits_codim(elements[i], codim) && elements[i].fixed_codim() == codim) ? 1 : 0;
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i])
      hits.push_back(i);
  return hits;
}

}  // namespace avq::kernels
