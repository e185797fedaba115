#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgraded/poly.hpp"
#include "zgraded/rational.hpp"

namespace zgr {

// Reduced fraction of polynomials. The denominator is kept as a
// product of monic non-constant factors; any rational scale lives in
// the numerator coefficients. Exponential factors never appear in a
// denominator (they are units and move to the numerator side).
struct Fraction {
    Poly num;
    std::vector<std::pair<Poly, int>> den; // sorted, factors monic, exp >= 1

    static Fraction zero(std::size_t nsyms);
    static Fraction one(std::size_t nsyms);
    static Fraction of(Poly p);

    bool is_zero() const { return num.is_zero(); }
    std::size_t nsyms() const { return num.nsyms(); }

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction inverse() const; // throws AlgebraError on zero

    Fraction derivative(std::size_t id) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    // Expanded denominator as a single polynomial.
    Poly den_expanded() const;

    void reduce(); // cancel factors dividing the numerator

    static int compare(const Fraction& a, const Fraction& b);

    std::string str(const SymbolTable& table) const;
};

// Canonical scalar expression over the base coordinates: a sum of
// terms F_u * exp(u) with pairwise distinct exponents u, each F_u a
// reduced Fraction. The exponent u = 0 term is the rational-function
// part. Products of exponentials merge through exponent arithmetic,
// exp(u)*exp(v) = exp(u+v). Immutable value type.
class Expr {
public:
    Expr() = default; // zero over an empty symbol table

    static Expr zero(std::size_t nsyms);
    static Expr constant(std::size_t nsyms, const Rational& c);
    static Expr symbol(std::size_t nsyms, std::size_t id);
    static Expr from_poly(Poly p);
    static Expr from_fraction(Fraction f);

    std::size_t nsyms() const { return nsyms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Constant rational value, if the expression is one.
    std::optional<Rational> as_rational() const;
    // True when the expression is a single exponential-free fraction
    // with trivial denominator.
    bool is_poly() const;

    Expr operator-() const;
    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;

    // Division; the divisor must be a single-term expression (one
    // exponential factor at most), otherwise AlgebraError.
    Expr operator/(const Expr& o) const;
    Expr inverse() const;
    Expr pow(int k) const;

    static Expr exp_of(const Expr& u);

    Expr derivative(std::size_t id) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    // A structurally nonzero expression is trusted to be semantically
    // nonzero unless it mixes several exponential atoms with
    // non-polynomial exponents (where canonical forms may fail to
    // merge equal atoms).
    bool nonzero_is_trusted() const;

    static int compare(const Expr& a, const Expr& b);
    bool operator==(const Expr& o) const { return compare(*this, o) == 0; }

    std::string str(const SymbolTable& table) const;

    struct Term {
        std::shared_ptr<const Expr> expo; // null means exponent zero
        Fraction frac;
    };
    const std::vector<Term>& terms() const { return terms_; }

private:
    void normalize();

    std::size_t nsyms_ = 0;
    std::vector<Term> terms_; // sorted by exponent
};

} // namespace zgr
