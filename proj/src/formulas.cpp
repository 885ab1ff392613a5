#include "delta/formulas.hpp"

#include "delta/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace delta {

SymFunc k1_formula(int n, QtZero zero) {
    if (n < 1) throw std::invalid_argument("k1_formula: n >= 1");
    SymFunc out(Basis::S, n);
    for (int m = 0; 2 * m <= n; ++m) {
        MultiPoly c;
        for (int p = m; p <= n - m; ++p) c += qtint(p, zero);
        if (!c.is_zero()) out.add(two_column_shape(n, m), RatFunc(c));
    }
    return out;
}

SymFunc q1_formula(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("q1_formula: need 1 <= k <= n");
    SymFunc f = plethysm_times(SymFunc::e(n), Alphabet::from_poly(MultiPoly(static_cast<long>(k + 1))));
    Rational c = qbinom(n, k).substitute({{Q, MultiPoly(1)}}).constant_term() / Rational(k + 1);
    return f * RatFunc(c);
}

Rational run_type_count(const Partition& lambda) {
    int n = 0;
    for (int v : lambda) n += v;
    int len = static_cast<int>(lambda.size());
    // (n+1)! / (prod c_i! * (n - len + 1)!) / (n+1)
    auto fact = [](int m) {
        Rational r(1);
        for (int i = 2; i <= m; ++i) r = r * Rational(i);
        return r;
    };
    Rational r = fact(n + 1) / fact(n - len + 1);
    for (size_t i = 0; i < lambda.size();) {
        size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
        r = r / fact(static_cast<int>(j - i));
        i = j;
    }
    return r / Rational(n + 1);
}

std::map<Partition, long> run_type_census(int n) {
    std::map<Partition, long> out;
    for (const auto& a : dyck_paths(n)) {
        Partition runs;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || a[i] <= a[i - 1]) runs.push_back(0);
            ++runs.back();
        }
        out[sorted_partition(runs)]++;
    }
    return out;
}

}  // namespace delta
