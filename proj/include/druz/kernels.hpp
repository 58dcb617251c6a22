#pragma once

#include "druz/polynomial.hpp"

namespace druz::kernels {

/// Runtime switch for the OpenMP paths. Exact rational arithmetic makes
/// every schedule produce bit-identical results, so this only trades time.
bool parallel_enabled();
void set_parallel_enabled(bool on);
int max_threads();

/// Term-by-term product. bound < 0 means untruncated; otherwise terms of
/// total degree > bound are dropped.
Polynomial mul_serial(const Polynomial& a, const Polynomial& b, int64_t bound = -1);
Polynomial mul_parallel(const Polynomial& a, const Polynomial& b, int64_t bound = -1);
Polynomial mul(const Polynomial& a, const Polynomial& b, int64_t bound = -1);

}  // namespace druz::kernels
