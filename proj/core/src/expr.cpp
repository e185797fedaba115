#include "zgraded/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zgraded/errors.hpp"

namespace zgr {

// ---------------------------------------------------------------- Fraction

Fraction Fraction::zero(std::size_t nsyms) { return Fraction{Poly(nsyms), {}}; }

Fraction Fraction::one(std::size_t nsyms) {
    return Fraction{Poly::constant(nsyms, 1), {}};
}

Fraction Fraction::of(Poly p) { return Fraction{std::move(p), {}}; }

Fraction Fraction::operator-() const { return Fraction{-num, den}; }

void Fraction::reduce() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto it = den.begin(); it != den.end();) {
        while (it->second > 0) {
            auto q = num.divided_by(it->first);
            if (!q) break;
            num = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den.erase(it) : ++it;
    }
}

namespace {

void merge_factor(std::vector<std::pair<Poly, int>>& den, const Poly& f,
                  int mult) {
    auto it = std::lower_bound(
        den.begin(), den.end(), f,
        [](const auto& a, const Poly& b) { return a.first < b; });
    if (it != den.end() && it->first == f) {
        it->second += mult;
    } else {
        den.insert(it, {f, mult});
    }
}

} // namespace

Fraction Fraction::operator*(const Fraction& o) const {
    Fraction out;
    out.num = num * o.num;
    out.den = den;
    for (const auto& [f, m] : o.den) merge_factor(out.den, f, m);
    out.reduce();
    return out;
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // union of denominator factors with maximal multiplicities
    std::vector<std::pair<Poly, int>> common = den;
    for (const auto& [f, m] : o.den) {
        auto it = std::lower_bound(
            common.begin(), common.end(), f,
            [](const auto& a, const Poly& b) { return a.first < b; });
        if (it != common.end() && it->first == f)
            it->second = std::max(it->second, m);
        else
            common.insert(it, {f, m});
    }
    auto scale = [&](const Fraction& x) {
        Poly s = x.num;
        for (const auto& [f, m] : common) {
            int have = 0;
            auto it = std::lower_bound(
                x.den.begin(), x.den.end(), f,
                [](const auto& a, const Poly& b) { return a.first < b; });
            if (it != x.den.end() && it->first == f) have = it->second;
            for (int k = have; k < m; ++k) s = s * f;
        }
        return s;
    };
    Fraction out;
    out.num = scale(*this) + scale(o);
    out.den = std::move(common);
    out.reduce();
    return out;
}

Fraction Fraction::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero expression");
    Fraction out = one(num.nsyms());
    for (const auto& [f, m] : den)
        for (int k = 0; k < m; ++k) out.num = out.num * f;
    Poly d = num;
    Rational lead = d.make_monic();
    Poly scaled = out.num;
    out.num = Poly(num.nsyms());
    for (const auto& [m, c] : scaled.terms()) out.num.add_term(m, c / lead);
    if (!d.is_constant()) out.den.push_back({std::move(d), 1});
    out.reduce();
    return out;
}

Fraction Fraction::derivative(std::size_t id) const {
    // d(N / prod f_i^{m_i}) =
    //   (N' prod f_i - N sum_i m_i f_i' prod_{j!=i} f_j) / prod f_i^{m_i+1}
    if (den.empty()) return Fraction{num.derivative(id), {}};
    Poly top = num.derivative(id);
    for (const auto& [f, m] : den) top = top * f;
    for (std::size_t i = 0; i < den.size(); ++i) {
        Poly piece = -num * den[i].first.derivative(id) *
                     Poly::constant(num.nsyms(), den[i].second);
        for (std::size_t j = 0; j < den.size(); ++j)
            if (j != i) piece = piece * den[j].first;
        top += piece;
    }
    Fraction out;
    out.num = std::move(top);
    out.den = den;
    for (auto& [f, m] : out.den) ++m;
    out.reduce();
    return out;
}

Rational Fraction::eval(const std::vector<Rational>& point) const {
    Rational v = num.eval(point);
    for (const auto& [f, m] : den) {
        Rational d = f.eval(point);
        if (sgn(d) == 0) throw PoleError("evaluation hit a pole");
        for (int k = 0; k < m; ++k) v /= d;
    }
    return v;
}

double Fraction::eval(const std::vector<double>& point) const {
    double v = num.eval(point);
    for (const auto& [f, m] : den) {
        double d = f.eval(point);
        if (std::abs(d) < 1e-300) throw PoleError("evaluation hit a pole");
        v /= std::pow(d, m);
    }
    return v;
}

Poly Fraction::den_expanded() const {
    Poly d = Poly::constant(num.nsyms(), 1);
    for (const auto& [f, m] : den)
        for (int k = 0; k < m; ++k) d = d * f;
    return d;
}

int Fraction::compare(const Fraction& a, const Fraction& b) {
    if (a.den.size() != b.den.size())
        return a.den.size() < b.den.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.den.size(); ++i) {
        if (a.den[i].first < b.den[i].first) return -1;
        if (b.den[i].first < a.den[i].first) return 1;
        if (a.den[i].second != b.den[i].second)
            return a.den[i].second < b.den[i].second ? -1 : 1;
    }
    if (a.num < b.num) return -1;
    if (b.num < a.num) return 1;
    return 0;
}

std::string Fraction::str(const SymbolTable& table) const {
    std::ostringstream os;
    bool wrap_num = num.terms().size() > 1 && !den.empty();
    if (wrap_num) os << "(";
    os << num.str(table);
    if (wrap_num) os << ")";
    for (const auto& [f, m] : den) {
        os << "/(" << f.str(table) << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

// -------------------------------------------------------------------- Expr

Expr Expr::zero(std::size_t nsyms) {
    Expr e;
    e.nsyms_ = nsyms;
    return e;
}

Expr Expr::constant(std::size_t nsyms, const Rational& c) {
    return from_poly(Poly::constant(nsyms, c));
}

Expr Expr::symbol(std::size_t nsyms, std::size_t id) {
    return from_poly(Poly::symbol(nsyms, id));
}

Expr Expr::from_poly(Poly p) { return from_fraction(Fraction::of(std::move(p))); }

Expr Expr::from_fraction(Fraction f) {
    Expr e;
    e.nsyms_ = f.nsyms();
    if (!f.is_zero()) e.terms_.push_back({nullptr, std::move(f)});
    return e;
}

bool Expr::is_one() const {
    auto c = as_rational();
    return c && *c == 1;
}

std::optional<Rational> Expr::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1 || terms_[0].expo || !terms_[0].frac.den.empty())
        return std::nullopt;
    return terms_[0].frac.num.as_constant();
}

bool Expr::is_poly() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && !terms_[0].expo && terms_[0].frac.den.empty();
}

namespace {

// total order on exponents; null (exponent zero) first
int expo_compare(const std::shared_ptr<const Expr>& a,
                 const std::shared_ptr<const Expr>& b) {
    if (!a && !b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    return Expr::compare(*a, *b);
}

} // namespace

void Expr::normalize() {
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) {
                         return expo_compare(a.expo, b.expo) < 0;
                     });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && expo_compare(out.back().expo, t.expo) == 0) {
            out.back().frac = out.back().frac + t.frac;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.frac.is_zero()) terms_.push_back(std::move(t));
}

Expr Expr::operator-() const {
    Expr e = *this;
    for (auto& t : e.terms_) t.frac = -t.frac;
    return e;
}

Expr Expr::operator+(const Expr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (nsyms_ != o.nsyms_) throw DimensionError("expression symbol mismatch");
    Expr e;
    e.nsyms_ = nsyms_;
    e.terms_ = terms_;
    e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
    e.normalize();
    return e;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    if (nsyms_ != o.nsyms_) throw DimensionError("expression symbol mismatch");
    Expr e;
    e.nsyms_ = nsyms_;
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            Term t;
            t.frac = ta.frac * tb.frac;
            if (t.frac.is_zero()) continue;
            if (!ta.expo && !tb.expo) {
                t.expo = nullptr;
            } else if (!ta.expo) {
                t.expo = tb.expo;
            } else if (!tb.expo) {
                t.expo = ta.expo;
            } else {
                Expr sum = *ta.expo + *tb.expo;
                t.expo = sum.is_zero()
                             ? nullptr
                             : std::make_shared<const Expr>(std::move(sum));
            }
            e.terms_.push_back(std::move(t));
        }
    }
    e.normalize();
    return e;
}

Expr Expr::inverse() const {
    if (is_zero()) throw AlgebraError("division by zero expression");
    if (terms_.size() != 1)
        throw AlgebraError(
            "cannot invert a sum of distinct exponential terms");
    Expr e;
    e.nsyms_ = nsyms_;
    Term t;
    t.frac = terms_[0].frac.inverse();
    if (terms_[0].expo) {
        Expr neg = -*terms_[0].expo;
        t.expo = std::make_shared<const Expr>(std::move(neg));
    }
    e.terms_.push_back(std::move(t));
    return e;
}

Expr Expr::operator/(const Expr& o) const { return *this * o.inverse(); }

Expr Expr::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Expr acc = Expr::constant(nsyms_, 1);
    Expr base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

Expr Expr::exp_of(const Expr& u) {
    if (u.is_zero()) return Expr::constant(u.nsyms(), 1);
    Expr e;
    e.nsyms_ = u.nsyms();
    Term t;
    t.expo = std::make_shared<const Expr>(u);
    t.frac = Fraction::one(u.nsyms());
    e.terms_.push_back(std::move(t));
    return e;
}

Expr Expr::derivative(std::size_t id) const {
    Expr out = Expr::zero(nsyms_);
    for (const auto& t : terms_) {
        Expr piece = Expr::zero(nsyms_);
        Fraction df = t.frac.derivative(id);
        if (!df.is_zero()) {
            Expr e;
            e.nsyms_ = nsyms_;
            e.terms_.push_back({t.expo, std::move(df)});
            piece = std::move(e);
        }
        if (t.expo) {
            Expr du = t.expo->derivative(id);
            if (!du.is_zero()) {
                Expr e;
                e.nsyms_ = nsyms_;
                e.terms_.push_back({t.expo, t.frac});
                piece = piece + e * du;
            }
        }
        out = out + piece;
    }
    return out;
}

Rational Expr::eval(const std::vector<Rational>& point) const {
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational f = t.frac.eval(point);
        if (t.expo) {
            Rational u = t.expo->eval(point);
            if (sgn(u) != 0)
                throw AlgebraError(
                    "exact evaluation of exp at a nonzero argument is "
                    "irrational");
        }
        acc += f;
    }
    return acc;
}

double Expr::eval(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& t : terms_) {
        double f = t.frac.eval(point);
        if (t.expo) f *= std::exp(t.expo->eval(point));
        acc += f;
    }
    return acc;
}

bool Expr::nonzero_is_trusted() const {
    int exp_terms = 0;
    for (const auto& t : terms_)
        if (t.expo) ++exp_terms;
    if (exp_terms == 0) return true;
    if (terms_.size() == 1) return true;
    for (const auto& t : terms_)
        if (t.expo && !t.expo->is_poly()) return false;
    return true;
}

int Expr::compare(const Expr& a, const Expr& b) {
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        int c = expo_compare(a.terms_[i].expo, b.terms_[i].expo);
        if (c != 0) return c;
        c = Fraction::compare(a.terms_[i].frac, b.terms_[i].frac);
        if (c != 0) return c;
    }
    return 0;
}

std::string Expr::str(const SymbolTable& table) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool one_frac =
            !t.expo ? false
                    : (t.frac.den.empty() && t.frac.num.as_constant() &&
                       *t.frac.num.as_constant() == 1);
        if (!t.expo) {
            os << t.frac.str(table);
        } else if (one_frac) {
            os << "exp(" << t.expo->str(table) << ")";
        } else {
            bool wrap = t.frac.num.terms().size() > 1 && t.frac.den.empty();
            if (wrap) os << "(";
            os << t.frac.str(table);
            if (wrap) os << ")";
            os << "*exp(" << t.expo->str(table) << ")";
        }
    }
    return os.str();
}

} // namespace zgr
