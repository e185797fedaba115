#include "zgraded/degree.hpp"

#include <algorithm>

#include "zgraded/errors.hpp"

namespace zgr {

Degree::Degree(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b = static_cast<std::uint8_t>(b & 1u);
}

Degree::Degree(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(static_cast<std::uint8_t>(b & 1));
}

Degree Degree::zero(std::size_t n) {
    return Degree(std::vector<std::uint8_t>(n, 0));
}

bool Degree::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(),
                       [](std::uint8_t b) { return b == 0; });
}

int Degree::parity() const {
    int s = 0;
    for (auto b : bits_) s ^= b;
    return s;
}

Degree Degree::operator+(const Degree& other) const {
    if (size() != other.size())
        throw DimensionError("degree length mismatch: " + str() + " vs " +
                             other.str());
    std::vector<std::uint8_t> out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = static_cast<std::uint8_t>(bits_[i] ^ other.bits_[i]);
    return Degree(std::move(out));
}

std::string Degree::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + bits_[i]);
    }
    s += ')';
    return s;
}

int scalar_product(const Degree& a, const Degree& b) {
    if (a.size() != b.size())
        throw DimensionError("degree length mismatch: " + a.str() + " vs " +
                             b.str());
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s ^= (a.bit(i) & b.bit(i));
    return s;
}

int koszul_sign(const Degree& a, const Degree& b) {
    return scalar_product(a, b) ? -1 : 1;
}

bool canonical_degree_less(const Degree& a, const Degree& b) {
    if (a.parity() != b.parity()) return a.parity() < b.parity();
    return a < b;
}

std::vector<Degree> canonical_degree_order(std::size_t n) {
    std::vector<Degree> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t i = 0; i < n; ++i)
            bits[i] = static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1u);
        out.emplace_back(std::move(bits));
    }
    std::stable_sort(out.begin(), out.end(), canonical_degree_less);
    return out;
}

} // namespace zgr
