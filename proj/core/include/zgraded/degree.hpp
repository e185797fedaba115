#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zgr {

// An element of Z_2^n. n is a runtime parameter so one binary serves
// charts of any rank; n = 0 (classical manifolds) is first-class.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::vector<std::uint8_t> bits);
    Degree(std::initializer_list<int> bits);

    static Degree zero(std::size_t n);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t i) const { return bits_[i]; }
    bool is_zero() const;

    // Total degree mod 2; equals <d,d>. Generators of odd parity are
    // the nilpotent ones.
    int parity() const;

    // Componentwise addition mod 2 (self-inverse).
    Degree operator+(const Degree& other) const;

    bool operator==(const Degree& other) const { return bits_ == other.bits_; }
    bool operator!=(const Degree& other) const { return bits_ != other.bits_; }
    // Lexicographic; used for map keys only, not the index convention.
    bool operator<(const Degree& other) const { return bits_ < other.bits_; }

    // "(0,1)"; "()" for n = 0.
    std::string str() const;

private:
    std::vector<std::uint8_t> bits_;
};

// Standard scalar product on Z_2^n, reduced mod 2. Throws
// DimensionError on length mismatch.
int scalar_product(const Degree& a, const Degree& b);

// (-1)^<a,b>, the sign picked up when swapping homogeneous elements.
int koszul_sign(const Degree& a, const Degree& b);

// All 2^n degrees: zero first, even total degree before odd,
// lexicographic fill-from-the-left within each parity.
std::vector<Degree> canonical_degree_order(std::size_t n);

// Comparator realising the order above.
bool canonical_degree_less(const Degree& a, const Degree& b);

} // namespace zgr
