#include "delta/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace delta {

namespace {
const char* kNames[] = {"q", "t", "z", "w", "u"};

int32_t checked_add(int32_t a, int32_t b) {
    int64_t s = static_cast<int64_t>(a) + b;
    if (s > std::numeric_limits<int32_t>::max() || s < 0) throw std::overflow_error("exponent overflow");
    return static_cast<int32_t>(s);
}
}  // namespace

std::string var_name(int slot) {
    if (slot < 0) throw std::invalid_argument("bad variable slot");
    if (slot < X0) return kNames[slot];
    return "x" + std::to_string(slot - X0 + 1);
}

int parse_var(const std::string& name) {
    for (int i = 0; i < X0; ++i)
        if (name == kNames[i]) return i;
    if (name.size() > 1 && name[0] == 'x') {
        size_t pos = 0;
        int i = std::stoi(name.substr(1), &pos);
        if (pos + 1 == name.size() && i >= 1) return xvar(i);
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

Mono Mono::var(int slot, int32_t power) {
    if (power < 0) throw std::invalid_argument("negative exponent");
    std::vector<int32_t> e(slot + 1, 0);
    e[slot] = power;
    return Mono(std::move(e));
}

void Mono::set(int slot, int32_t v) {
    if (v < 0) throw std::invalid_argument("negative exponent");
    if (slot >= static_cast<int>(e_.size())) {
        if (v == 0) return;
        e_.resize(slot + 1, 0);
    }
    e_[slot] = v;
    trim();
}

Mono Mono::operator*(const Mono& o) const {
    const auto& a = e_.size() >= o.e_.size() ? e_ : o.e_;
    const auto& b = e_.size() >= o.e_.size() ? o.e_ : e_;
    std::vector<int32_t> r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
    Mono m;
    m.e_ = std::move(r);
    return m;
}

bool Mono::divides(const Mono& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Mono Mono::operator/(const Mono& o) const {
    if (!o.divides(*this)) throw std::invalid_argument("monomial does not divide");
    std::vector<int32_t> r(e_);
    for (size_t i = 0; i < o.e_.size(); ++i) r[i] -= o.e_[i];
    return Mono(std::move(r));
}

long Mono::total_degree() const {
    long d = 0;
    for (auto v : e_) d += v;
    return d;
}

MultiPoly::MultiPoly(long c) {
    if (c != 0) terms_.emplace(Mono(), Rational(c));
}
MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Mono(), c);
}
MultiPoly::MultiPoly(const Mono& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational MultiPoly::constant_term() const { return coeff(Mono()); }

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}
const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.constant_term();
    if (b.is_constant()) return a * b.constant_term();
    std::vector<std::pair<Mono, Rational>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
    std::sort(prods.begin(), prods.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    MultiPoly r;
    auto hint = r.terms_.end();
    for (size_t i = 0; i < prods.size();) {
        size_t j = i;
        Rational s = 0;
        while (j < prods.size() && prods[j].first == prods[i].first) s += prods[j++].second;
        if (s != 0) hint = r.terms_.emplace_hint(hint, std::move(prods[i].first), s);
        i = j;
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1), base(*this);
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

int32_t MultiPoly::degree(int slot) const {
    int32_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[slot]);
    return d;
}

int32_t MultiPoly::min_degree(int slot) const {
    if (terms_.empty()) return -1;
    int32_t d = std::numeric_limits<int32_t>::max();
    for (const auto& [m, c] : terms_) d = std::min(d, m[slot]);
    return d;
}

int MultiPoly::max_slot() const {
    int s = -1;
    for (const auto& [m, c] : terms_) s = std::max(s, m.size() - 1);
    return s;
}

bool MultiPoly::uses_only(std::initializer_list<int> slots) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < m.size(); ++i)
            if (m[i] != 0 && std::find(slots.begin(), slots.end(), i) == slots.end()) return false;
    return true;
}

MultiPoly MultiPoly::coeff_extract(int slot, int32_t k) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[slot] != k) continue;
        Mono mm = m;
        mm.set(slot, 0);
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& bindings) const {
    std::map<std::pair<int, int32_t>, MultiPoly> powers;
    auto power = [&](int slot, int32_t e) -> const MultiPoly& {
        auto key = std::make_pair(slot, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, bindings.at(slot).pow(static_cast<unsigned>(e))).first->second;
    };
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        MultiPoly factor(c);
        for (const auto& [slot, val] : bindings) {
            int32_t e = m[slot];
            if (e == 0) continue;
            rest.set(slot, 0);
            factor *= power(slot, e);
            if (factor.is_zero()) break;
        }
        if (factor.is_zero()) continue;
        for (const auto& [fm, fc] : factor.terms_) r.add_term(fm * rest, fc);
    }
    return r;
}

MultiPoly MultiPoly::shift(const std::vector<int32_t>& delta) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        std::vector<int32_t> e(std::max<size_t>(m.raw().size(), delta.size()), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = m[static_cast<int>(i)] + (i < delta.size() ? delta[i] : 0);
            if (e[i] < 0) throw std::domain_error("shift produces a negative exponent");
        }
        r.terms_.emplace(Mono(std::move(e)), c);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return MultiPoly();
    if (d.is_constant()) return *this * (Rational(1) / d.constant_term());
    MultiPoly rem(*this), quo;
    const Mono& lm = d.leading_mono();
    const Rational& lc = d.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        if (!lm.divides(rm)) return std::nullopt;
        Mono qm = rm / lm;
        Rational qc = rem.leading_coeff() / lc;
        quo.add_term(qm, qc);
        for (const auto& [m, c] : d.terms_) rem.add_term(m * qm, -(c * qc));
    }
    return quo;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += c.get_str();
        for (int i = 0; i < m.size(); ++i)
            if (m[i] != 0) out += "*" + var_name(i) + "^" + std::to_string(m[i]);
    }
    return out;
}

MultiPoly MultiPoly::parse(const std::string& s) {
    MultiPoly r;
    if (s == "0") return r;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + s + "'");
        size_t star = term.find('*');
        Rational c = parse_rational(term.substr(0, star));
        Mono m;
        while (star != std::string::npos) {
            size_t nstar = term.find('*', star + 1);
            std::string factor = term.substr(star + 1, nstar == std::string::npos ? std::string::npos : nstar - star - 1);
            size_t caret = factor.find('^');
            if (caret == std::string::npos) throw std::invalid_argument("missing exponent in '" + factor + "'");
            int slot = parse_var(factor.substr(0, caret));
            size_t used = 0;
            long e = std::stol(factor.substr(caret + 1), &used);
            if (used + caret + 1 != factor.size() || e <= 0 || e > std::numeric_limits<int32_t>::max())
                throw std::invalid_argument("bad exponent in '" + factor + "'");
            if (m[slot] != 0) throw std::invalid_argument("repeated variable in '" + term + "'");
            m.set(slot, static_cast<int32_t>(e));
            star = nstar;
        }
        if (c == 0) throw std::invalid_argument("zero coefficient in serialized polynomial");
        if (r.terms_.count(m)) throw std::invalid_argument("repeated monomial in '" + s + "'");
        r.terms_.emplace(m, c);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

DivMod univariate_divmod(const MultiPoly& a, const MultiPoly& b, int slot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!a.uses_only({slot}) || !b.uses_only({slot})) throw std::invalid_argument("univariate_divmod needs univariate input");
    DivMod r{MultiPoly(), a};
    int32_t db = b.degree(slot);
    Rational lc = b.leading_coeff();
    while (!r.remainder.is_zero() && r.remainder.degree(slot) >= db) {
        int32_t dr = r.remainder.degree(slot);
        Rational c = r.remainder.leading_coeff() / lc;
        MultiPoly step(Mono::var(slot, dr - db), c);
        r.quotient += step;
        r.remainder -= step * b;
    }
    return r;
}

}  // namespace delta
