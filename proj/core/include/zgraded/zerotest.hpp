#pragma once

#include <string>

#include "zgraded/expr.hpp"

namespace zgr {

// Outcome of a zero test. Canonical forms decide most cases exactly;
// the numeric verdicts exist for expressions mixing exponential atoms
// whose equality the canonicalisation cannot settle.
enum class ZeroStatus { SymbolicZero, NumericZero, NonZero };

const char* to_string(ZeroStatus s);

inline ZeroStatus worse(ZeroStatus a, ZeroStatus b) { return a < b ? b : a; }

struct ZeroTestOptions {
    unsigned seed = 12345;
    double tolerance = 1e-9;
    int samples = 5;
};

ZeroStatus expr_zero_status(const Expr& e, const ZeroTestOptions& opts = {});

} // namespace zgr
