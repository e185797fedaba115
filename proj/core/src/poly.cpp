#include "zgraded/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zgraded/errors.hpp"

namespace zgr {

SymbolTable::SymbolTable(std::vector<std::string> names)
    : names_(std::move(names)) {}

std::optional<std::size_t> SymbolTable::find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Poly Poly::constant(std::size_t nsyms, const Rational& c) {
    Poly p(nsyms);
    if (!zgr::is_zero(c)) p.terms_.emplace(Mono(nsyms, 0), c);
    return p;
}

Poly Poly::symbol(std::size_t nsyms, std::size_t id, int power) {
    if (id >= nsyms) throw DimensionError("symbol id out of range");
    Poly p(nsyms);
    if (power == 0) return constant(nsyms, 1);
    Mono m(nsyms, 0);
    m[id] = static_cast<std::uint16_t>(power);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           terms_.begin()->first == Mono(nsyms_, 0);
}

std::optional<Rational> Poly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) return std::nullopt;
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly out(nsyms_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (zgr::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (zgr::is_zero(it->second)) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (nsyms_ != o.nsyms_) {
        if (is_zero() && terms_.empty()) nsyms_ = o.nsyms_;
        else if (!o.is_zero())
            throw DimensionError("polynomial symbol-count mismatch");
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out += -o;
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (nsyms_ != o.nsyms_ && !is_zero() && !o.is_zero())
        throw DimensionError("polynomial symbol-count mismatch");
    Poly out(nsyms_);
    Mono m(nsyms_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nsyms_; ++i)
                m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::derivative(std::size_t id) const {
    Poly out(nsyms_);
    for (const auto& [m, c] : terms_) {
        if (m[id] == 0) continue;
        Mono d = m;
        d[id] = static_cast<std::uint16_t>(d[id] - 1);
        out.add_term(d, c * Rational(m[id]));
    }
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nsyms_)
        throw DimensionError("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nsyms_; ++i)
            for (int k = 0; k < m[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

double Poly::eval(const std::vector<double>& point) const {
    if (point.size() != nsyms_)
        throw DimensionError("evaluation point has wrong length");
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (std::size_t i = 0; i < nsyms_; ++i)
            t *= std::pow(point[i], static_cast<double>(m[i]));
        acc += t;
    }
    return acc;
}

namespace {

bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

} // namespace

std::optional<Poly> Poly::divided_by(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Poly(nsyms_);
    if (nsyms_ != d.nsyms_)
        throw DimensionError("polynomial symbol-count mismatch");
    // lex leading term of the divisor
    const auto& dlead = *d.terms_.rbegin();
    Poly rem = *this;
    Poly quot(nsyms_);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!mono_divides(dlead.first, rlead.first)) return std::nullopt;
        Mono qm(nsyms_);
        for (std::size_t i = 0; i < nsyms_; ++i)
            qm[i] = static_cast<std::uint16_t>(rlead.first[i] - dlead.first[i]);
        Rational qc = rlead.second / dlead.second;
        Poly qt(nsyms_);
        qt.terms_.emplace(qm, qc);
        quot += qt;
        rem += -(qt * d);
    }
    return quot;
}

Rational Poly::make_monic() {
    if (is_zero()) return Rational(1);
    Rational lead = terms_.rbegin()->second;
    for (auto& [m, c] : terms_) c /= lead;
    return lead;
}

int Poly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

bool Poly::operator<(const Poly& o) const {
    if (nsyms_ != o.nsyms_) return nsyms_ < o.nsyms_;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0) return c < 0;
    }
    return terms_.size() < o.terms_.size();
}

std::string Poly::str(const SymbolTable& table) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest monomial first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool trivial_mono =
            std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
        bool coeff_shown = (a != 1) || trivial_mono;
        if (coeff_shown) os << to_string(a);
        bool any = false;
        for (std::size_t i = 0; i < nsyms_; ++i) {
            if (m[i] == 0) continue;
            if (coeff_shown || any) os << "*";
            os << table.name(i);
            if (m[i] > 1) os << "^" << m[i];
            any = true;
        }
    }
    return os.str();
}

} // namespace zgr
