#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgraded/rational.hpp"

namespace zgr {

// Names of the base (degree-zero) coordinates of a chart. Polynomials
// and expressions refer to symbols by id; the table resolves names for
// parsing and printing.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t id) const { return names_[id]; }
    std::optional<std::size_t> find(const std::string& name) const;

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

// Dense exponent vector, one slot per symbol.
using Mono = std::vector<std::uint16_t>;

// Sparse multivariate polynomial over Q. Zero coefficients are never
// stored; the zero polynomial has no terms.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::size_t nsyms) : nsyms_(nsyms) {}

    static Poly constant(std::size_t nsyms, const Rational& c);
    static Poly symbol(std::size_t nsyms, std::size_t id, int power = 1);

    std::size_t nsyms() const { return nsyms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant value if is_constant(), otherwise nullopt.
    std::optional<Rational> as_constant() const;

    const std::map<Mono, Rational>& terms() const { return terms_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);

    void add_term(const Mono& m, const Rational& c);

    Poly derivative(std::size_t id) const;

    Rational eval(const std::vector<Rational>& point) const;
    double eval(const std::vector<double>& point) const;

    // Exact division; nullopt if the division does not go through.
    std::optional<Poly> divided_by(const Poly& d) const;

    // Scales the polynomial so its lex-leading coefficient is one and
    // returns the factor that was removed.
    Rational make_monic();

    int total_degree() const;

    bool operator==(const Poly& o) const {
        return nsyms_ == o.nsyms_ && terms_ == o.terms_;
    }
    bool operator<(const Poly& o) const;

    std::string str(const SymbolTable& table) const;

private:
    std::size_t nsyms_ = 0;
    std::map<Mono, Rational> terms_;
};

} // namespace zgr
