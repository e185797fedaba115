#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgraded/degree.hpp"
#include "zgraded/poly.hpp"

namespace zgr {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

struct GeneratorSpec {
    std::string name;
    Degree degree; // nonzero
};

// A coordinate system: p base coordinates of degree zero followed by
// the formal generators, grouped by the canonical degree order. The
// index order is fixed for the lifetime of a computation; series and
// tensors refer to coordinates by position in this order.
//
// trunc_order bounds the total power of non-nilpotent generators that
// is reported; internally all arithmetic keeps work_order() =
// trunc_order + 3 so that first, second and third derivatives of
// truncated data are still exact through the reported window.
class Chart {
public:
    static ChartPtr make(std::size_t n, std::vector<std::string> base_names,
                         std::vector<GeneratorSpec> generators,
                         int trunc_order = kDefaultTruncOrder);

    static constexpr int kDefaultTruncOrder = 4;
    static constexpr int kWorkHeadroom = 3;

    std::size_t n() const { return n_; }
    std::size_t num_base() const { return base_->size(); }
    std::size_t num_gens() const { return gens_.size(); }
    std::size_t dim() const { return num_base() + num_gens(); }

    int trunc_order() const { return trunc_order_; }
    int work_order() const { return trunc_order_ + kWorkHeadroom; }

    bool is_generator(std::size_t index) const { return index >= num_base(); }
    const std::string& coord_name(std::size_t index) const;
    const Degree& coord_degree(std::size_t index) const;
    // Generator-local index (0-based) for a coordinate index.
    std::size_t gen_index(std::size_t index) const { return index - num_base(); }
    const Degree& gen_degree(std::size_t g) const { return gens_[g].degree; }
    const std::string& gen_name(std::size_t g) const { return gens_[g].name; }
    // A generator squares to zero iff its degree has odd parity.
    bool gen_nilpotent(std::size_t g) const { return nilpotent_[g] != 0; }

    std::optional<std::size_t> find(const std::string& name) const;

    SymbolTablePtr symbols() const { return base_; }

    // Slot counts q_i indexed by canonical_degree_order(n); q_0 counts
    // the base coordinates.
    std::vector<std::size_t> degree_counts() const;

private:
    Chart() = default;

    std::size_t n_ = 0;
    SymbolTablePtr base_;
    std::vector<GeneratorSpec> gens_;
    std::vector<std::uint8_t> nilpotent_;
    Degree zero_degree_;
    int trunc_order_ = kDefaultTruncOrder;
};

} // namespace zgr
