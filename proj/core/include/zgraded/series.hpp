#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zgraded/chart.hpp"
#include "zgraded/degree.hpp"
#include "zgraded/expr.hpp"
#include "zgraded/zerotest.hpp"

namespace zgr {

// Exponent vector over the chart's generators, in chart order.
// Normal-ordered by construction; nilpotent generators carry exponent
// at most one.
using GenMono = std::vector<std::uint8_t>;

// Z_2^n-degree of a generator monomial.
Degree mono_degree(const Chart& chart, const GenMono& m);

// Total power of the non-nilpotent generators; the truncation filter.
int mono_weight(const Chart& chart, const GenMono& m);

// Truncated formal power series in the chart's generators with Expr
// coefficients: the local model of a function. Immutable value type;
// all arithmetic truncates eagerly at the chart's work_order().
class GradedSeries {
public:
    GradedSeries() = default;
    explicit GradedSeries(ChartPtr chart) : chart_(std::move(chart)) {}

    static GradedSeries constant(ChartPtr chart, const Rational& c);
    static GradedSeries coordinate(ChartPtr chart, std::size_t index);
    static GradedSeries from_expr(ChartPtr chart, Expr e);
    static GradedSeries monomial(ChartPtr chart, GenMono m, Expr coeff);

    const ChartPtr& chart() const { return chart_; }
    const std::map<GenMono, Expr>& terms() const { return terms_; }

    bool is_structural_zero() const { return terms_.empty(); }
    ZeroStatus zero_status(const ZeroTestOptions& opts = {}) const;

    Expr body() const;
    Expr coefficient(const GenMono& m) const;

    GradedSeries operator-() const;
    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries& operator+=(const GradedSeries& o);

    GradedSeries scal(const Expr& f) const;
    GradedSeries scal(const Rational& c) const;

    // Left graded derivation along the chart coordinate `index`.
    GradedSeries derive(std::size_t index) const;

    // Multiplicative inverse modulo truncation; requires an
    // invertible body.
    GradedSeries invert() const;

    GradedSeries pow(int k) const;

    // Drops monomials of non-nilpotent weight above `order`.
    GradedSeries truncated(int order) const;
    // Truncation at the chart's reported window.
    GradedSeries reported() const { return truncated(chart_->trunc_order()); }

    // The common degree of all monomials, if the series is homogeneous
    // and nonzero.
    std::optional<Degree> homogeneous_degree() const;
    // Zero counts as homogeneous of every degree.
    bool is_homogeneous_of(const Degree& d) const;
    std::map<Degree, GradedSeries> homogeneous_components() const;

    // Evaluates coefficients at a base point and contracts with the
    // supplied monomial weights. The empty monomial defaults to
    // weight one when absent.
    Rational evaluate(const std::vector<Rational>& base_point,
                      const std::map<GenMono, Rational>& weights = {}) const;

    std::string str() const;

private:
    void add_term(const GenMono& m, const Expr& c);
    void require_same_chart(const GradedSeries& o) const;

    ChartPtr chart_;
    std::map<GenMono, Expr> terms_;
};

// exp of a series, expanded as exp(body) * sum_k j^k / k! with j the
// generator part, truncated.
GradedSeries exp_of(const GradedSeries& a);

} // namespace zgr
