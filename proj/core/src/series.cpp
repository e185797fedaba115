#include "zgraded/series.hpp"

#include <algorithm>
#include <sstream>

#include "zgraded/errors.hpp"

namespace zgr {

Degree mono_degree(const Chart& chart, const GenMono& m) {
    Degree d = Degree::zero(chart.n());
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] & 1) d = d + chart.gen_degree(g);
    return d;
}

int mono_weight(const Chart& chart, const GenMono& m) {
    int w = 0;
    for (std::size_t g = 0; g < m.size(); ++g)
        if (!chart.gen_nilpotent(g)) w += m[g];
    return w;
}

namespace {

// Normal-ordered product of two monomials: merged exponents and the
// sign accumulated while commuting the right factor into place.
// Returns false when the product vanishes (nilpotent square) or falls
// outside the truncation window.
bool mul_mono(const Chart& chart, const GenMono& a, const GenMono& b,
              GenMono& out, int& sign) {
    const std::size_t m = a.size();
    int exponent = 0;
    int weight = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (b[j]) {
            // b[j] copies of generator j cross every a[l] with l > j
            for (std::size_t l = j + 1; l < m; ++l)
                if (a[l] & 1 && b[j] & 1)
                    exponent ^= scalar_product(chart.gen_degree(j),
                                               chart.gen_degree(l));
        }
        int e = a[j] + b[j];
        if (e >= 2 && chart.gen_nilpotent(j)) return false;
        if (!chart.gen_nilpotent(j)) weight += e;
        out[j] = static_cast<std::uint8_t>(e);
    }
    if (weight > chart.work_order()) return false;
    sign = exponent ? -1 : 1;
    return true;
}

} // namespace

GradedSeries GradedSeries::constant(ChartPtr chart, const Rational& c) {
    Expr e = Expr::constant(chart->num_base(), c);
    return from_expr(std::move(chart), std::move(e));
}

GradedSeries GradedSeries::coordinate(ChartPtr chart, std::size_t index) {
    if (index >= chart->dim()) throw ChartError("coordinate index out of range");
    GradedSeries s(chart);
    if (chart->is_generator(index)) {
        GenMono m(chart->num_gens(), 0);
        m[chart->gen_index(index)] = 1;
        s.terms_.emplace(std::move(m),
                         Expr::constant(chart->num_base(), 1));
    } else {
        s.terms_.emplace(GenMono(chart->num_gens(), 0),
                         Expr::symbol(chart->num_base(), index));
    }
    return s;
}

GradedSeries GradedSeries::from_expr(ChartPtr chart, Expr e) {
    GradedSeries s(std::move(chart));
    if (!e.is_zero())
        s.terms_.emplace(GenMono(s.chart_->num_gens(), 0), std::move(e));
    return s;
}

GradedSeries GradedSeries::monomial(ChartPtr chart, GenMono m, Expr coeff) {
    GradedSeries s(std::move(chart));
    if (m.size() != s.chart_->num_gens())
        throw ChartError("monomial length does not match chart");
    for (std::size_t g = 0; g < m.size(); ++g)
        if (m[g] >= 2 && s.chart_->gen_nilpotent(g)) return s;
    if (mono_weight(*s.chart_, m) > s.chart_->work_order()) return s;
    if (!coeff.is_zero()) s.terms_.emplace(std::move(m), std::move(coeff));
    return s;
}

ZeroStatus GradedSeries::zero_status(const ZeroTestOptions& opts) const {
    ZeroStatus st = ZeroStatus::SymbolicZero;
    for (const auto& [m, c] : terms_) {
        st = worse(st, expr_zero_status(c, opts));
        if (st == ZeroStatus::NonZero) break;
    }
    return st;
}

Expr GradedSeries::body() const {
    return coefficient(GenMono(chart_->num_gens(), 0));
}

Expr GradedSeries::coefficient(const GenMono& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    return Expr::zero(chart_->num_base());
}

void GradedSeries::add_term(const GenMono& m, const Expr& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GradedSeries::require_same_chart(const GradedSeries& o) const {
    if (chart_ != o.chart_)
        throw ChartError("operands live on different charts");
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries out(chart_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    if (!chart_) {
        *this = o;
        return *this;
    }
    require_same_chart(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
    GradedSeries out = *this;
    out += o;
    return out;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
    GradedSeries out = *this;
    out += -o;
    return out;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
    require_same_chart(o);
    GradedSeries out(chart_);
    GenMono mm(chart_->num_gens());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            int sign = 1;
            if (!mul_mono(*chart_, ma, mb, mm, sign)) continue;
            Expr c = ca * cb;
            if (sign < 0) c = -c;
            out.add_term(mm, c);
        }
    }
    return out;
}

GradedSeries GradedSeries::scal(const Expr& f) const {
    GradedSeries out(chart_);
    if (f.is_zero()) return out;
    for (const auto& [m, c] : terms_) {
        Expr p = c * f;
        if (!p.is_zero()) out.terms_.emplace(m, std::move(p));
    }
    return out;
}

GradedSeries GradedSeries::scal(const Rational& c) const {
    return scal(Expr::constant(chart_->num_base(), c));
}

GradedSeries GradedSeries::derive(std::size_t index) const {
    if (index >= chart_->dim())
        throw ChartError("unknown coordinate index in derivative");
    GradedSeries out(chart_);
    if (!chart_->is_generator(index)) {
        for (const auto& [m, c] : terms_) {
            Expr d = c.derivative(index);
            if (!d.is_zero()) out.terms_.emplace(m, std::move(d));
        }
        return out;
    }
    const std::size_t g = chart_->gen_index(index);
    const Degree& dg = chart_->gen_degree(g);
    for (const auto& [m, c] : terms_) {
        if (m[g] == 0) continue;
        // commute the derivation left past the generators preceding g
        int exponent = 0;
        for (std::size_t l = 0; l < g; ++l)
            if (m[l] & 1) exponent ^= scalar_product(dg, chart_->gen_degree(l));
        GenMono d = m;
        d[g] = static_cast<std::uint8_t>(d[g] - 1);
        Expr coeff = c * Expr::constant(chart_->num_base(), Rational(m[g]));
        if (exponent) coeff = -coeff;
        out.add_term(d, coeff);
    }
    return out;
}

GradedSeries GradedSeries::invert() const {
    Expr b0 = body();
    if (b0.is_zero())
        throw AlgebraError("series is not invertible: zero body");
    Expr b0inv = b0.inverse();
    // a = b0 (1 + u) with u in the ideal of generators
    GradedSeries u = scal(b0inv);
    u.terms_.erase(GenMono(chart_->num_gens(), 0));
    GradedSeries acc = GradedSeries::constant(chart_, 1);
    GradedSeries power = GradedSeries::constant(chart_, 1);
    const int cap = chart_->work_order() +
                    static_cast<int>(chart_->num_gens()) + 1;
    for (int k = 1; k <= cap; ++k) {
        power = power * (-u);
        if (power.is_structural_zero()) break;
        acc += power;
    }
    return acc.scal(b0inv);
}

GradedSeries GradedSeries::pow(int k) const {
    if (k < 0) return invert().pow(-k);
    GradedSeries acc = GradedSeries::constant(chart_, 1);
    GradedSeries base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

GradedSeries GradedSeries::truncated(int order) const {
    GradedSeries out(chart_);
    for (const auto& [m, c] : terms_)
        if (mono_weight(*chart_, m) <= order) out.terms_.emplace(m, c);
    return out;
}

std::optional<Degree> GradedSeries::homogeneous_degree() const {
    std::optional<Degree> deg;
    for (const auto& [m, c] : terms_) {
        Degree d = mono_degree(*chart_, m);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

bool GradedSeries::is_homogeneous_of(const Degree& d) const {
    for (const auto& [m, c] : terms_)
        if (mono_degree(*chart_, m) != d) return false;
    return true;
}

std::map<Degree, GradedSeries> GradedSeries::homogeneous_components() const {
    std::map<Degree, GradedSeries> out;
    for (const auto& [m, c] : terms_) {
        Degree d = mono_degree(*chart_, m);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, GradedSeries(chart_)).first;
        it->second.terms_.emplace(m, c);
    }
    return out;
}

Rational GradedSeries::evaluate(
    const std::vector<Rational>& base_point,
    const std::map<GenMono, Rational>& weights) const {
    Rational acc(0);
    const GenMono empty(chart_->num_gens(), 0);
    for (const auto& [m, c] : terms_) {
        Rational w(0);
        auto it = weights.find(m);
        if (it != weights.end())
            w = it->second;
        else if (m == empty)
            w = 1;
        if (sgn(w) == 0) continue;
        std::string mono = "1";
        if (m != empty) {
            mono.clear();
            for (std::size_t g = 0; g < m.size(); ++g) {
                if (!m[g]) continue;
                if (!mono.empty()) mono += "*";
                mono += chart_->gen_name(g);
                if (m[g] > 1) mono += "^" + std::to_string(m[g]);
            }
        }
        Rational v;
        try {
            v = c.eval(base_point);
        } catch (const PoleError&) {
            throw PoleError("pole in the coefficient of " + mono);
        }
        acc += w * v;
    }
    return acc;
}

std::string GradedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (!m[g]) continue;
            if (!mono.empty()) mono += "*";
            mono += chart_->gen_name(g);
            if (m[g] > 1) mono += "^" + std::to_string(m[g]);
        }
        std::string coeff = c.str(*chart_->symbols());
        if (mono.empty()) {
            os << coeff;
        } else if (c.is_one()) {
            os << mono;
        } else {
            bool wrap = c.terms().size() > 1 ||
                        coeff.find(" + ") != std::string::npos ||
                        coeff.find(" - ") != std::string::npos;
            if (wrap)
                os << "(" << coeff << ")";
            else
                os << coeff;
            os << "*" << mono;
        }
    }
    return os.str();
}

GradedSeries exp_of(const GradedSeries& a) {
    Expr b0 = a.body();
    GradedSeries j = a - GradedSeries::from_expr(a.chart(), b0);
    GradedSeries acc = GradedSeries::constant(a.chart(), 1);
    GradedSeries power = GradedSeries::constant(a.chart(), 1);
    Rational factorial(1);
    const int cap = a.chart()->work_order() +
                    static_cast<int>(a.chart()->num_gens()) + 1;
    for (int k = 1; k <= cap; ++k) {
        power = power * j;
        if (power.is_structural_zero()) break;
        factorial *= k;
        acc += power.scal(Rational(1) / factorial);
    }
    return acc.scal(Expr::exp_of(b0));
}

} // namespace zgr
