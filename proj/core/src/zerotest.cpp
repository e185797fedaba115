#include "zgraded/zerotest.hpp"

#include <cmath>
#include <random>

#include "zgraded/errors.hpp"

namespace zgr {

const char* to_string(ZeroStatus s) {
    switch (s) {
        case ZeroStatus::SymbolicZero: return "symbolic-zero";
        case ZeroStatus::NumericZero: return "numeric-zero";
        case ZeroStatus::NonZero: return "nonzero";
    }
    return "?";
}

ZeroStatus expr_zero_status(const Expr& e, const ZeroTestOptions& opts) {
    if (e.is_zero()) return ZeroStatus::SymbolicZero;
    if (e.nonzero_is_trusted()) return ZeroStatus::NonZero;
    std::mt19937 rng(opts.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    int done = 0;
    int attempts = 0;
    while (done < opts.samples && attempts < 40 * opts.samples) {
        ++attempts;
        std::vector<double> point(e.nsyms());
        for (auto& x : point) x = dist(rng);
        try {
            double v = e.eval(point);
            if (!std::isfinite(v)) continue;
            if (std::abs(v) > opts.tolerance) return ZeroStatus::NonZero;
            ++done;
        } catch (const PoleError&) {
            continue;
        }
    }
    return done == opts.samples ? ZeroStatus::NumericZero : ZeroStatus::NonZero;
}

} // namespace zgr
