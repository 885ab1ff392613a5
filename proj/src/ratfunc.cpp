#include "delta/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace delta {

namespace {

MultiPoly content_t(const MultiPoly& p);

MultiPoly make_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coeff());
}

// coefficients of p as a polynomial in t over Q[q]
std::vector<MultiPoly> t_coeffs(const MultiPoly& p) {
    std::vector<MultiPoly> c(p.is_zero() ? 0 : p.degree(T) + 1);
    for (const auto& [m, v] : p.terms()) {
        Mono mq;
        mq.set(Q, m[Q]);
        c[m[T]].add_term(mq, v);
    }
    return c;
}

MultiPoly lc_t(const MultiPoly& p) { return p.coeff_extract(T, p.degree(T)); }

// pseudo-remainder of a by b in t
MultiPoly prem_t(MultiPoly a, const MultiPoly& b) {
    int32_t db = b.degree(T);
    MultiPoly lb = lc_t(b);
    while (!a.is_zero() && a.degree(T) >= db) {
        int32_t da = a.degree(T);
        MultiPoly la = lc_t(a);
        a = lb * a - la * MultiPoly::var(T, da - db) * b;
    }
    return a;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("internal: expected exact division");
    return *q;
}

bool is_monomial(const MultiPoly& p) { return p.size() == 1; }

}  // namespace


namespace {

// dense univariate polynomial over Q, index = degree
using UPoly = std::vector<Rational>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly to_upoly(const MultiPoly& p, int slot) {
    UPoly u(p.is_zero() ? 0 : p.degree(slot) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) u[m[slot]] += c;
    return u;
}

MultiPoly from_upoly(const UPoly& u, int slot) {
    MultiPoly p;
    for (size_t i = 0; i < u.size(); ++i) p.add_term(Mono::var(slot, static_cast<int32_t>(i)), u[i]);
    return p;
}

void make_monic(UPoly& a) {
    if (a.empty() || a.back() == 1) return;
    Rational inv = Rational(1) / a.back();
    for (auto& c : a) c *= inv;
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
    Rational lb = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lb;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = upoly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        make_monic(a);
    }
    make_monic(a);
    return a;
}

Rational upoly_eval(const UPoly& a, const Rational& x) {
    Rational r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

// p(q0, t) as a polynomial in t
UPoly eval_q(const MultiPoly& p, long q0) {
    UPoly u(p.degree(T) + 1, Rational(0));
    std::vector<Integer> pw{1};
    for (const auto& [m, c] : p.terms()) {
        int32_t a = m[Q];
        while (static_cast<int32_t>(pw.size()) <= a) pw.push_back(pw.back() * q0);
        u[m[T]] += c * Rational(pw[a]);
    }
    trim(u);
    return u;
}

// Newton interpolation through (xs[i], ys[i]), returned in the monomial basis
UPoly interpolate(const std::vector<long>& xs, std::vector<Rational> ys) {
    size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / Rational(xs[i] - xs[i - j]);
    UPoly r{ys[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // r = r * (x - xs[i]) + ys[i]
        UPoly next(r.size() + 1, Rational(0));
        for (size_t k = 0; k < r.size(); ++k) {
            next[k + 1] += r[k];
            next[k] -= r[k] * xs[i];
        }
        next[0] += ys[i];
        r = std::move(next);
    }
    trim(r);
    return r;
}

MultiPoly content_t(const MultiPoly& p) {
    UPoly g;
    for (const auto& c : t_coeffs(p)) {
        if (c.is_zero()) continue;
        g = g.empty() ? to_upoly(c, Q) : upoly_gcd(g, to_upoly(c, Q));
        if (g.size() == 1) break;
    }
    make_monic(g);
    return from_upoly(g, Q);
}

MultiPoly prs_gcd(MultiPoly pa, MultiPoly pb) {
    if (pa.degree(T) < pb.degree(T)) std::swap(pa, pb);
    while (!pb.is_zero() && pb.degree(T) > 0) {
        MultiPoly r = prem_t(pa, pb);
        pa = std::move(pb);
        if (r.is_zero()) return pa;
        pb = exact(r, content_t(r));
    }
    return pb.is_zero() ? pa : MultiPoly(1);
}

// gcd of polynomials primitive in t, both of positive t-degree: images at q = q0,
// interpolated in q, then verified by exact division
MultiPoly interp_gcd(const MultiPoly& a, const MultiPoly& b) {
    UPoly la = to_upoly(lc_t(a), Q), lb = to_upoly(lc_t(b), Q);
    UPoly gamma = upoly_gcd(la, lb);
    long bound = static_cast<long>(gamma.size()) - 1 + std::min(a.degree(Q), b.degree(Q));
    std::vector<long> xs;
    std::vector<UPoly> images;
    long best = -1;
    int failures = 0;
    for (long q0 = 1; q0 < 100000; ++q0) {
        Rational g0 = upoly_eval(gamma, q0);
        if (g0 == 0 || upoly_eval(la, q0) == 0 || upoly_eval(lb, q0) == 0) continue;
        UPoly g = upoly_gcd(eval_q(a, q0), eval_q(b, q0));
        long e = static_cast<long>(g.size()) - 1;
        if (e == 0) return MultiPoly(1);
        if (best >= 0 && e > best) continue;
        if (e < best || best < 0) {
            best = e;
            xs.clear();
            images.clear();
        }
        for (auto& c : g) c *= g0;
        xs.push_back(q0);
        images.push_back(std::move(g));
        if (static_cast<long>(xs.size()) < bound + 1) continue;
        MultiPoly cand;
        for (long j = 0; j <= best; ++j) {
            std::vector<Rational> ys;
            for (const auto& im : images) ys.push_back(im[j]);
            UPoly cj = interpolate(xs, ys);
            for (size_t i = 0; i < cj.size(); ++i) {
                Mono m;
                m.set(Q, static_cast<int32_t>(i));
                m.set(T, static_cast<int32_t>(j));
                cand.add_term(m, cj[i]);
            }
        }
        cand = exact(cand, content_t(cand));
        if (a.divisible_by(cand) && b.divisible_by(cand)) return cand;
        if (++failures > 2) break;
    }
    return prs_gcd(a, b);
}

}  // namespace

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, int slot) {
    return from_upoly(upoly_gcd(to_upoly(a, slot), to_upoly(b, slot)), slot);
}

MultiPoly gcd_qt(const MultiPoly& a, const MultiPoly& b) {
    if (!a.uses_only({Q, T}) || !b.uses_only({Q, T})) throw std::invalid_argument("gcd_qt needs polynomials in q,t");
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    if (is_monomial(a) || is_monomial(b)) {
        Mono m;
        m.set(Q, std::min(a.min_degree(Q), b.min_degree(Q)));
        m.set(T, std::min(a.min_degree(T), b.min_degree(T)));
        return MultiPoly(m, 1);
    }
    MultiPoly ca = content_t(a), cb = content_t(b);
    MultiPoly c = gcd_univariate(ca, cb, Q);
    MultiPoly pa = exact(a, ca), pb = exact(b, cb);
    MultiPoly g = (pa.degree(T) == 0 || pb.degree(T) == 0) ? MultiPoly(1) : interp_gcd(pa, pb);
    return make_monic(c * g);
}

RatFunc::RatFunc(const MultiPoly& p) : num_(p), den_(1) {
    if (!p.uses_only({Q, T})) throw std::invalid_argument("RatFunc holds polynomials in q,t only");
}

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    if (!n.uses_only({Q, T}) || !d.uses_only({Q, T})) throw std::invalid_argument("RatFunc holds polynomials in q,t only");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = gcd_qt(num_, den_);
        if (!g.is_constant()) {
            num_ = exact(num_, g);
            den_ = exact(den_, g);
        }
    }
    normalize_sign();
}

MultiPoly RatFunc::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
    return num_;
}

void RatFunc::normalize_sign() {
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

// u/u' + v/v' with d1 = gcd(u',v'): numerator w = u(v'/d1) + v(u'/d1) shares with the
// denominator only factors of d1
RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;
        return *this;
    }
    MultiPoly d1 = den_ == o.den_ ? den_ : gcd_qt(den_, o.den_);
    MultiPoly ud = exact(den_, d1), vd = exact(o.den_, d1);
    MultiPoly w = num_ * vd + o.num_ * ud;
    if (w.is_zero()) return *this = RatFunc();
    MultiPoly d2 = d1.is_constant() ? MultiPoly(1) : gcd_qt(w, d1);
    num_ = exact(w, d2);
    den_ = ud * exact(o.den_, d2);
    normalize_sign();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (o.num_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_.constant_term() / o.den_.constant_term();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ *= o.num_;
        return *this;
    }
    // both factors are reduced, so only cross cancellation is possible
    MultiPoly g1 = o.den_.is_constant() ? MultiPoly(1) : gcd_qt(num_, o.den_);
    MultiPoly g2 = den_.is_constant() ? MultiPoly(1) : gcd_qt(o.num_, den_);
    num_ = exact(num_, g1) * exact(o.num_, g2);
    den_ = exact(den_, g2) * exact(o.den_, g1);
    normalize_sign();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.num_.is_constant()) return *this *= RatFunc(o.den_ * (Rational(1) / o.num_.constant_term()), MultiPoly(1), raw_tag{});
    return *this *= RatFunc(o.den_, o.num_);
}

std::string RatFunc::to_string() const {
    if (den_ == MultiPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& s) {
    if (s.empty() || s.front() != '(') return RatFunc(MultiPoly::parse(s));
    size_t mid = s.find(")/(");
    if (mid == std::string::npos || s.back() != ')') throw std::invalid_argument("bad rational function '" + s + "'");
    return RatFunc(MultiPoly::parse(s.substr(1, mid - 1)), MultiPoly::parse(s.substr(mid + 3, s.size() - mid - 4)));
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

RatFunc specialize(const MultiPoly& p, const Bindings& b) {
    std::map<int, int32_t> top;
    for (const auto& [slot, v] : b) top[slot] = std::max<int32_t>(0, p.degree(slot));
    // term * prod N^e D^(E-e) over prod D^E
    std::map<std::pair<int, int32_t>, MultiPoly> npow, dpow;
    auto power = [](auto& cache, int slot, int32_t e, const MultiPoly& base) -> const MultiPoly& {
        auto key = std::make_pair(slot, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, base.pow(static_cast<unsigned>(e))).first->second;
    };
    MultiPoly num;
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        MultiPoly f(c);
        for (const auto& [slot, v] : b) {
            int32_t e = m[slot];
            rest.set(slot, 0);
            f *= power(npow, slot, e, v.num());
            f *= power(dpow, slot, top[slot] - e, v.den());
            if (f.is_zero()) break;
        }
        if (f.is_zero()) continue;
        for (const auto& [fm, fc] : f.terms()) num.add_term(fm * rest, fc);
    }
    MultiPoly den(1);
    for (const auto& [slot, v] : b) den *= power(dpow, slot, top[slot], v.den());
    if (!num.uses_only({Q, T})) throw std::invalid_argument("specialize leaves variables other than q,t");
    return RatFunc(num, den);
}

RatFunc specialize(const RatFunc& r, const Bindings& b) {
    RatFunc d = specialize(r.den(), b);
    if (d.is_zero()) throw std::domain_error("specialization makes a denominator vanish");
    return specialize(r.num(), b) / d;
}

MultiPoly specialize_poly(const MultiPoly& p, const std::map<int, MultiPoly>& b) { return p.substitute(b); }

}  // namespace delta
