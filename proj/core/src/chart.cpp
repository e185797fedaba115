#include "zgraded/chart.hpp"

#include <algorithm>
#include <set>

#include "zgraded/errors.hpp"

namespace zgr {

ChartPtr Chart::make(std::size_t n, std::vector<std::string> base_names,
                     std::vector<GeneratorSpec> generators, int trunc_order) {
    if (trunc_order < 0) throw ChartError("trunc_order must be >= 0");
    std::set<std::string> seen;
    for (const auto& b : base_names)
        if (!seen.insert(b).second)
            throw ChartError("duplicate coordinate name: " + b);
    for (const auto& g : generators) {
        if (!seen.insert(g.name).second)
            throw ChartError("duplicate coordinate name: " + g.name);
        if (g.degree.size() != n)
            throw DimensionError("generator " + g.name + " has degree " +
                                 g.degree.str() + ", expected length " +
                                 std::to_string(n));
        if (g.degree.is_zero())
            throw ChartError("generator " + g.name +
                             " must have nonzero degree");
    }
    // group generators by the canonical degree order, stable within a
    // degree slot
    std::stable_sort(generators.begin(), generators.end(),
                     [](const GeneratorSpec& a, const GeneratorSpec& b) {
                         return canonical_degree_less(a.degree, b.degree);
                     });
    auto chart = std::shared_ptr<Chart>(new Chart());
    chart->n_ = n;
    chart->base_ = std::make_shared<const SymbolTable>(std::move(base_names));
    chart->nilpotent_.reserve(generators.size());
    for (const auto& g : generators)
        chart->nilpotent_.push_back(
            static_cast<std::uint8_t>(scalar_product(g.degree, g.degree)));
    chart->gens_ = std::move(generators);
    chart->zero_degree_ = Degree::zero(n);
    chart->trunc_order_ = trunc_order;
    return chart;
}

const std::string& Chart::coord_name(std::size_t index) const {
    if (index < num_base()) return base_->name(index);
    return gens_[index - num_base()].name;
}

const Degree& Chart::coord_degree(std::size_t index) const {
    if (index < num_base()) return zero_degree_;
    return gens_[index - num_base()].degree;
}

std::optional<std::size_t> Chart::find(const std::string& name) const {
    if (auto id = base_->find(name)) return *id;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (gens_[g].name == name) return num_base() + g;
    return std::nullopt;
}

std::vector<std::size_t> Chart::degree_counts() const {
    auto order = canonical_degree_order(n_);
    std::vector<std::size_t> q(order.size(), 0);
    q[0] = num_base();
    for (const auto& g : gens_) {
        auto it = std::find(order.begin(), order.end(), g.degree);
        q[static_cast<std::size_t>(it - order.begin())] += 1;
    }
    return q;
}

} // namespace zgr
