#pragma once

#include <vector>

#include "mdsum/composition.hpp"
#include "mdsum/qseries.hpp"

namespace mdsum {

/// Sum of v_1^{r_1} ... v_l^{r_l} over u_1 v_1 + ... + u_l v_l = n with
/// u_1 > ... > u_l > 0.  Plain enumeration; meant for small n.
Integer multiple_divisor_sum(const std::vector<int>& r, int n);

/// [s_1,...,s_l] through q^order.  The coefficient of q^n is
/// sigma_{s_1-1,...,s_l-1}(n) / prod (s_i-1)!.  Results are cached per
/// composition; the cache is safe to use from several threads.
QSeries bracket_series(const Composition& c, int order);

/// Same series by a second route: nested Eulerian kernels
/// z P_{s-1}(z) / ((s-1)! (1-z)^s), summed layer by layer over the chain of
/// indices.  Uncached.
QSeries bracket_series_oracle(const Composition& c, int order);

/// Integer coefficient list of x P_{s-1}(x) / (1-x)^s through x^order,
/// expanded from the Eulerian polynomial.
std::vector<Integer> eulerian_kernel_expansion(int s, int order);

/// p(0..order) by Euler's pentagonal recurrence.
std::vector<Integer> partition_numbers(int order);

/// Checks that sum over l of [1,...,1] (l ones) has coefficient p(n) at q^n
/// for 1 <= n <= order.
bool partition_identity_check(int order);

/// Drops every cached bracket series.
void clear_bracket_cache();

}  // namespace mdsum
