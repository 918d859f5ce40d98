#include "nsdisp/rng.hpp"

#include <cmath>

namespace nsdisp {

double SplitMix64::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

RandomCase random_case(SplitMix64& rng, const RandomCaseOptions& opt) {
    RandomCase rc;
    rc.fluid.rho = rng.log_uniform(0.1, 1e4);
    rc.fluid.T = rng.uniform(100.0, 1000.0);
    rc.fluid.gamma = rng.uniform(opt.gamma_min, opt.gamma_max);
    rc.fluid.Cv = rng.uniform(100.0, 5000.0);
    rc.fluid.c = rng.log_uniform(10.0, 5000.0);
    rc.k = rng.log_uniform(1e-2, 1e6);

    const double kn = rng.log_uniform(opt.kn_min, opt.kn_max);
    const double pr = rng.log_uniform(opt.pr_min, opt.pr_max);
    rc.fluid.mu = kn * rc.fluid.rho * rc.fluid.c / rc.k;
    rc.fluid.lambda = rc.fluid.mu * rc.fluid.gamma * rc.fluid.Cv / pr;
    return rc;
}

} // namespace nsdisp
