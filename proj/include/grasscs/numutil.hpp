#pragma once

#include <functional>
#include <vector>

namespace grasscs {

/// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
/// degree 2n-1.
struct GaussLegendre {
    std::vector<double> nodes, weights;
    explicit GaussLegendre(int n);
};

/// Recursive adaptive Simpson on [a, b] to the given absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

/// Worker cap from GRASSCS_THREADS, defaulting to the hardware count.
int max_threads();

/// Runs fn(block) for block = 0..count-1 on up to `threads` workers.
/// Results must be merged by the caller in block order for determinism.
void parallel_blocks(int count, int threads, const std::function<void(int)>& fn);

}  // namespace grasscs
