// Prints the quadratic shattering construction for a small vertex set and
// the sample-complexity bounds around it.

#include <cstdio>

#include "syds/theory.hpp"

int main() {
    using namespace syds;

    const int n = 4;
    auto inst = build_shatter_instance(n);
    std::printf("n=%d shattered set size=%zu (floor(n^2/4)=%lld)\n", n, inst.r.size(), ndim_lower_bound(n));
    for (std::size_t i = 0; i < inst.r.size(); ++i)
        std::printf("  %s -> g1 %s | g2 %s\n", inst.r[i].to_string().c_str(),
                    inst.g1_of_r[i].to_string().c_str(), inst.g2_of_r[i].to_string().c_str());
    std::printf("every subset realizable: %s\n", verify_shattering(n) ? "yes" : "no");

    BoundQuery q;
    q.n = n;
    q.epsilon = 0.1;
    q.delta = 0.1;
    std::printf("sample-complexity upper bound: %.2f\n", sample_complexity_upper(q));
    std::printf("dimension-based lower bound:  %.2f\n", ndim_sample_lower_bound(q));
    return 0;
}
