#include "delta/checks.hpp"

#include "delta/catalan.hpp"
#include "delta/formulas.hpp"
#include "delta/macdonald.hpp"
#include "delta/osp.hpp"
#include "delta/partial.hpp"
#include "delta/pathgf.hpp"
#include "delta/stacks.hpp"
#include "delta/xy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace delta {

std::string status_name(CheckStatus s) { return s == CheckStatus::Theorem ? "theorem" : "conjecture"; }
std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    throw std::invalid_argument("unknown profile '" + s + "'");
}

bool CheckResult::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

bool Report::theorem_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Theorem && !c.passed(); });
}

int Report::conjecture_mismatches() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Conjecture && !c.passed();
    }));
}

CheckRun::CheckRun(const CheckConfig& cfg, Caps caps, std::vector<CheckCase>& out, std::string name)
    : cfg_(cfg), caps_(caps), out_(out), name_(std::move(name)) {}

std::vector<int> CheckRun::ks(int lo, int hi) const {
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k)
        if (cfg_.k < 0 || cfg_.k == k) out.push_back(k);
    return out;
}

void CheckRun::expect(const std::string& params, bool ok, const std::string& expected, const std::string& actual) {
    out_.push_back({params, ok, ok ? "" : expected, ok ? "" : actual});
}

void CheckRun::progress(const std::string& msg) const {
    if (cfg_.progress) cfg_.progress(name_ + ": " + msg);
}

namespace {

template <class... A>
std::string par(const A&... a) {
    std::ostringstream os;
    bool key = true, first = true;
    auto put = [&](const auto& v) {
        if (key && !first) os << ';';
        os << v;
        if (key) os << '=';
        key = !key;
        first = false;
    };
    (put(a), ...);
    return os.str();
}

std::string comp_str(const std::vector<int>& c) { return partition_to_string(c); }

// Operator results are reused across checks within a process.
std::map<std::string, SymFunc> g_sym;

const SymFunc& remember(const std::string& key, const std::function<SymFunc()>& make) {
    auto it = g_sym.find(key);
    if (it == g_sym.end()) it = g_sym.emplace(key, make()).first;
    return it->second;
}

const SymFunc& dprime_e(int k, int n) {
    return remember(par("dp", k, "n", n), [&] { return delta_prime(SymFunc::e(k), SymFunc::e(n)); });
}

const SymFunc& delta_e(int k, int n) {
    return remember(par("d", k, "n", n), [&] { return delta_op(SymFunc::e(k), SymFunc::e(n)); });
}

MultiPoly qv(int e = 1) { return MultiPoly::var(Q, e); }

MultiPoly sub(const MultiPoly& p, std::initializer_list<std::pair<const int, MultiPoly>> b) { return p.substitute(b); }

MultiPoly monomial_coeff(const SymFunc& f, const Partition& lam) {
    return convert(f, Basis::M).coeff(lam).as_poly();
}

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

Rational catalan_number(int n) {
    return Rational(binomial(2 * n, n)) / Rational(n + 1);
}

// ---------------------------------------------------------------- path sides

void path_side(CheckRun& run, bool valley) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        int N = run.vars(n);
        run.progress(par("n", n));
        GfOptions opt{.N = N};
        MultiPoly side = valley ? val_z_poly(n, opt) : rise_z_poly(n, opt);
        for (int k : run.ks(0, n - 1)) {
            MultiPoly got = side.coeff_extract(Z, n - k - 1);
            run.equal(par("n", n, "k", k, "N", N), expand_vars(dprime_e(k, n), N), got);
        }
    }
}

void eq3(CheckRun& run) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("n", n));
        for (int k : run.ks(1, n + 2)) run.expect(par("n", n, "k", k), delta_identity_check(n, k));
    }
}

void battery(CheckRun& run) {
    auto e2 = validate_e2_expansion();
    run.expect("e2", e2.ok, "ok", e2.failure);
    for (int m = 1; m <= run.op_cap(); ++m) {
        run.progress(par("m", m));
        for (const auto& mu : partitions(m)) {
            auto r = validate_htilde(mu, htilde(mu), true);
            run.expect(par("mu", partition_to_string(mu)), r.ok, "ok", r.failure);
        }
    }
}

void t_recip(CheckRun& run) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("n", n));
        for (int k : run.ks(0, n - 1))
            run.equal(par("f", "e", "k", k, "n", n), delta_t_recip(SymFunc::e(k), n), specialize_t_recip(delta_e(k, n)));
    }
    for (int n = 1; n <= std::min(run.op_cap(), 5); ++n)
        for (int k : run.ks(1, 3))
            run.equal(par("f", "h", "k", k, "n", n), delta_t_recip(SymFunc::h(k), n),
                      specialize_t_recip(delta_op(SymFunc::h(k), SymFunc::e(n))));
}

void schur_pos(CheckRun& run) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("n", n));
        for (int k : run.ks(0, n - 1)) {
            RatFunc scale(MultiPoly::var(Q, k * (n - 1) - k * (k - 1) / 2));
            auto ex = schur_expand(specialize_t_recip(delta_e(k, n)) * scale);
            std::string bad;
            for (const auto& [lam, c] : ex.coeffs)
                if (!c.is_polynomial() || !has_nonnegative_coefficients(c.as_poly()))
                    bad = partition_to_string(lam) + "->" + c.to_string();
            run.expect(par("n", n, "k", k), ex.positive, "N[q] coefficients", bad);
        }
    }
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            int d = std::gcd(k + 1, n);
            auto div = poly_divides(qint(d), qbinom(n, k));
            bool ok = div.divides && has_nonnegative_coefficients(div.quotient);
            for (int p = 2; p <= d; ++p)
                if (d % p == 0) ok = ok && q_lucas_check(n, k, p).holds && q_lucas_check(n, k, p).residue.is_zero();
            run.expect(par("lucas_n", n, "k", k, "d", d), ok);
        }
}

// -------------------------------------------------------- q = 0 / t = 0 cases

MultiPoly at_t0(const MultiPoly& p) { return sub(p, {{T, MultiPoly(0)}}); }
MultiPoly at_0q(const MultiPoly& p) { return sub(sub(p, {{Q, MultiPoly(0)}}), {{T, qv()}}); }

void thm_zero(CheckRun& run) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("n", n));
        GfOptions opt{.N = n, .contents = Contents::Compositions};
        auto rise = rise_z_poly(n, opt), val = val_z_poly(n, opt);
        for (int k : run.ks(0, n - 1)) {
            MultiPoly r = x_coeff(rise, ones(n)).coeff_extract(Z, n - k - 1);
            MultiPoly v = x_coeff(val, ones(n)).coeff_extract(Z, n - k - 1);
            MultiPoly op = monomial_coeff(dprime_e(k, n), ones(n));
            MultiPoly base = at_t0(r);
            run.equal(par("n", n, "k", k, "side", "rise(0,q)"), base, at_0q(r));
            run.equal(par("n", n, "k", k, "side", "val(q,0)"), base, at_t0(v));
            run.equal(par("n", n, "k", k, "side", "op(q,0)"), base, at_t0(op));
            run.equal(par("n", n, "k", k, "side", "op(0,q)"), base, at_0q(op));
        }
    }
}

void omp(CheckRun& run) {
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("n", n));
        GfOptions opt{.N = n, .contents = Contents::Compositions};
        auto rise = rise_z_poly(n, opt), val = val_z_poly(n, opt);
        for (const auto& alpha : compositions(n)) {
            MultiPoly r = x_coeff(rise, alpha), v = x_coeff(val, alpha);
            for (int k : run.ks(0, n - 1)) {
                MultiPoly rk = r.coeff_extract(Z, n - k - 1), vk = v.coeff_extract(Z, n - k - 1);
                std::string a = comp_str(alpha);
                run.equal(par("alpha", a, "k", k, "stat", "dinv"), osp_gf(alpha, k + 1, OspStat::Dinv), at_t0(rk));
                run.equal(par("alpha", a, "k", k, "stat", "maj"), osp_gf(alpha, k + 1, OspStat::Maj), at_0q(rk));
                run.equal(par("alpha", a, "k", k, "stat", "inv"), osp_gf(alpha, k + 1, OspStat::Inv), at_t0(vk));
                run.equal(par("alpha", a, "k", k, "stat", "minimaj"), osp_gf(alpha, k + 1, OspStat::Minimaj), at_0q(vk));
            }
        }
    }
}

void minimaj_equi(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        for (const auto& alpha : compositions(n))
            for (int k : run.ks(1, n)) {
                MultiPoly inv = osp_gf(alpha, k, OspStat::Inv);
                std::string a = comp_str(alpha);
                run.equal(par("alpha", a, "blocks", k, "stat", "dinv"), inv, osp_gf(alpha, k, OspStat::Dinv));
                run.equal(par("alpha", a, "blocks", k, "stat", "maj"), inv, osp_gf(alpha, k, OspStat::Maj));
                run.equal(par("alpha", a, "blocks", k, "stat", "minimaj"), inv, osp_gf(alpha, k, OspStat::Minimaj));
            }
    }
}

void minimaj_min(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n)
        for (const auto& alpha : compositions(n))
            for (int k : run.ks(1, n)) {
                std::string bad;
                for_each_osp(alpha, k, [&](const OSP& p) {
                    if (bad.empty() && minimaj(p) != min_rearranged_maj(p)) bad = to_string(p);
                });
                run.expect(par("alpha", comp_str(alpha), "blocks", k), bad.empty(), "minimaj = least maj", bad);
            }
}

// ------------------------------------------------------------ closed forms

void k1(CheckRun& run) {
    QtZero z = run.config().qt_zero;
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("op n", n));
        run.equal(par("side", "op", "n", n), k1_formula(n, z), delta_e(1, n));
    }
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("paths n", n));
        auto rise = rise_z_poly(n, {.N = n, .contents = Contents::Partitions});
        SymFunc want = convert(k1_formula(n, z), Basis::M);
        for (const auto& lam : partitions(n)) {
            MultiPoly c = x_coeff(rise, lam);
            MultiPoly got = c.coeff_extract(Z, n - 1);
            if (n >= 2) got += c.coeff_extract(Z, n - 2);
            run.equal(par("side", "rise", "n", n, "lambda", partition_to_string(lam)), want.coeff(lam).as_poly(), got);
        }
    }
}

void q1(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        auto rise = rise_z_poly(n, {.N = n, .contents = Contents::Partitions});
        MultiPoly flat = sub(rise, {{Q, MultiPoly(1)}, {T, MultiPoly(1)}});
        for (int k : run.ks(1, n)) {
            SymFunc want = convert(q1_formula(n, k), Basis::M);
            for (const auto& lam : partitions(n)) {
                MultiPoly c = x_coeff(flat, lam);
                MultiPoly got = c.coeff_extract(Z, n - k);  // Rise_{n,k-1}
                if (k < n) got += c.coeff_extract(Z, n - k - 1);
                run.equal(par("n", n, "k", k, "lambda", partition_to_string(lam)), want.coeff(lam).as_poly(), got);
            }
        }
    }
}

// --------------------------------------------------------------- symmetry

void llt_sym(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        int N = run.vars(n);
        run.progress(par("n", n));
        MultiPoly rise = rise_z_poly(n, {.N = N});
        int bad = symmetry_violation(rise, N);
        run.expect(par("n", n, "N", N, "part", "symmetric"), bad == 0, "0", "x" + std::to_string(bad) + "<->x" + std::to_string(bad + 1));
        MultiPoly total;
        for (int k = 0; k < n; ++k)
            for (const auto& sh : stack_shapes(n, k))
                total += llt(sh, N) * MultiPoly(Mono::var(T, stack_area(sh)), 1) * MultiPoly(Mono::var(Z, n - k - 1), 1);
        run.equal(par("n", n, "N", N, "part", "llt-sum"), rise, total);
    }
}

void val_sym(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        int N = run.vars(n);
        run.progress(par("n", n));
        int bad = symmetry_violation(val_z_poly(n, {.N = N}), N);
        run.expect(par("n", n, "N", N), bad == 0, "0", "x" + std::to_string(bad) + "<->x" + std::to_string(bad + 1));
    }
}

// ------------------------------------------------------------ decorations

void decorating(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        GfOptions opt{.N = n, .contents = Contents::Partitions};
        MultiPoly rise = rise_z_poly(n, opt), val = val_z_poly(n, opt);
        opt.route = Route::RiseDecorated;
        run.equal(par("n", n, "form", "rise-decorated"), rise, rise_z_poly(n, opt));
        run.equal(par("n", n, "form", "valley-decorated"), val, val_z_poly(n, opt));
        opt.route = Route::FallDecorated;
        run.equal(par("n", n, "form", "fall-decorated"), rise, rise_z_poly(n, opt));
    }
}

void dinv_minus_check(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        // dropping a valley from V never lowers the value, so V = Val(P) is the worst case
        std::string bad;
        for_each_labeled_path(n, n, [&](const LabeledPath& p) {
            if (bad.empty() && dinv_minus(p, valleys(p)) < 0) bad = to_record(p, valleys(p));
        });
        run.expect(par("n", n), bad.empty(), "nonnegative", bad);
    }
}

void bijections(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        std::vector<long> by_fall(n), by_val(n), by_stack(n), by_dense(n);
        std::string phi_bad, psi_bad, theta_bad;
        for_each_labeled_path(n, n, [&](const LabeledPath& p) {
            for (const auto& F : subsets_of(falls(p.a))) {
                auto s = phi(p, F);
                bool ok = is_stack_path(s) && stack_area(s.shape()) == area_minus(p, F) && hdinv(s) == dinv(p) &&
                          phi_inverse(s) == std::make_pair(p, F);
                if (!ok && phi_bad.empty()) phi_bad = to_record(p, F);
                ++by_fall[n - 1 - F.size()];
            }
            for (const auto& V : subsets_of(valleys(p))) {
                auto s = psi(p, V);
                bool ok = is_stack_path(s) && stack_area(s.shape()) == area(p.a) && wdinv(s) == dinv_minus(p, V) &&
                          psi_inverse(s) == std::make_pair(p, V);
                if (!ok && psi_bad.empty()) psi_bad = to_record(p, V);
                ++by_val[n - 1 - V.size()];
            }
        });
        for (int k = 0; k < n; ++k) {
            for_each_stack_path(n, k, n, [&](const StackPath& s) {
                ++by_stack[k];
                auto d = theta(s);
                bool ok = is_dense_path(d) && dense_area(d) == stack_area(s.shape()) && dense_wdinv(d) == wdinv(s) &&
                          x_content(s.labels) == dense_content(d) && theta_inverse(d) == s;
                if (!ok && theta_bad.empty()) theta_bad = to_string(d);
            });
            for_each_dense_path(n, k, n, true, [&](const DensePath&) { ++by_dense[k]; });
        }
        auto counts = [](const std::vector<long>& v) {
            std::ostringstream os;
            for (long c : v) os << c << ',';
            return os.str();
        };
        run.expect(par("n", n, "map", "phi"), phi_bad.empty(), "round trip with transport", phi_bad);
        run.expect(par("n", n, "map", "psi"), psi_bad.empty(), "round trip with transport", psi_bad);
        run.expect(par("n", n, "map", "theta"), theta_bad.empty(), "round trip with transport", theta_bad);
        run.expect(par("n", n, "count", "fall"), by_fall == by_stack, counts(by_stack), counts(by_fall));
        run.expect(par("n", n, "count", "valley"), by_val == by_stack, counts(by_stack), counts(by_val));
        run.expect(par("n", n, "count", "dense"), by_dense == by_stack, counts(by_stack), counts(by_dense));
    }
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("gamma n", n));
        for (const auto& alpha : compositions(n))
            for (int blocks = 1; blocks <= n; ++blocks) {
                std::string bad;
                std::set<DensePath> image;
                long images = 0;
                for_each_osp(alpha, blocks, [&](const OSP& p) {
                    ++images;
                    auto d = gamma(p);
                    bool ok = is_dense_path(d) && dense_wdinv(d) == 0 && dense_area(d) == minimaj(p) &&
                              dense_content(d) == x_content(minimaj_word(p)) && gamma_inverse(d) == p;
                    if (!ok && bad.empty()) bad = to_string(p);
                    image.insert(d);
                });
                Mono want;
                for (size_t i = 0; i < alpha.size(); ++i) want.set(xvar(static_cast<int>(i) + 1), alpha[i]);
                long targets = 0, missed = 0;
                for_each_dense_path(n, blocks - 1, static_cast<int>(alpha.size()), true, [&](const DensePath& d) {
                    if (dense_content(d) != want || dense_wdinv(d) != 0) return;
                    ++targets;
                    missed += image.count(d) ? 0 : 1;
                });
                bool ok = bad.empty() && missed == 0 && static_cast<long>(image.size()) == images && images == targets;
                run.expect(par("alpha", comp_str(alpha), "blocks", blocks, "map", "gamma"), ok,
                           std::to_string(targets) + " images", bad.empty() ? std::to_string(image.size()) + " images" : bad);
            }
    }
}

void xy(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        std::string bad;
        for_each_two_column_yamanouchi(n, [&](const StackPath& p) {
            if (!bad.empty()) return;
            auto d = xy_diagram(p);
            try {
                classify(d);
            } catch (const std::logic_error&) {
                bad = "unclassified " + to_string(d);
                return;
            }
            if (!(xy_inverse(d) == p) || xy_hdinv(d) != hdinv(p)) bad = "round trip " + to_string(d);
        });
        run.expect(par("n", n, "part", "classify"), bad.empty(), "type I or II", bad);
        auto table = two_column_schur_table(n);
        for (int m = 0; 2 * m <= n; ++m)
            for (int j = 0; j <= n - m - 1; ++j) {
                MultiPoly want;
                for (int i = std::max(0, m - j - 1); i <= n - m - j - 1; ++i) want += qv(i);
                auto it = table.find({m, j});
                run.equal(par("n", n, "m", m, "j", j), want, it == table.end() ? MultiPoly() : it->second);
            }
    }
}

// ----------------------------------------------------------------- Catalan

MultiPoly eval4(const MultiPoly& p, long q, long t, long z, long w) {
    return sub(p, {{Q, MultiPoly(q)}, {T, MultiPoly(t)}, {Z, MultiPoly(z)}, {W, MultiPoly(w)}});
}

void cat4_check(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        Rational cat = catalan_number(n), pow2(1);
        for (int i = 1; i < n; ++i) pow2 *= 2;
        for (auto [name, p] : {std::pair<const char*, MultiPoly>{"cat", cat4(n)}, {"catmod", catmod4(n)}}) {
            run.equal(par("n", n, "poly", name, "at", "1100"), MultiPoly(cat), eval4(p, 1, 1, 0, 0));
            run.equal(par("n", n, "poly", name, "at", "1111"), MultiPoly(pow2 * cat), eval4(p, 1, 1, 1, 1));
            MultiPoly flat = sub(p, {{Q, MultiPoly(1)}, {T, MultiPoly(1)}});
            run.equal(par("n", n, "poly", name, "sym", "zw"), flat, flat.substitute({{Z, MultiPoly::var(W)}, {W, MultiPoly::var(Z)}}));
            MultiPoly lhs = sub(p, {{T, MultiPoly(1)}, {Z, MultiPoly(0)}});
            MultiPoly rhs = p.substitute({{Q, MultiPoly(1)}, {T, qv()}, {Z, MultiPoly::var(W)}, {W, MultiPoly(0)}});
            run.equal(par("n", n, "poly", name, "sym", "qt"), lhs, rhs);
        }
        std::string bad;
        for (const auto& a : dyck_paths(n)) {
            auto order = reading_order(a);
            auto peaks = peak_rows(a);
            std::vector<int> expect;
            bool first = true;
            for (size_t p = 0; p < order.size(); ++p) {
                if (std::find(peaks.begin(), peaks.end(), order[p]) == peaks.end()) continue;
                if (!first) expect.push_back(static_cast<int>(p) + 1);
                first = false;
            }
            if (bad.empty() && (reading_b_rises(a) != expect || expect.size() != catalan_valleys(a).size()))
                bad = partition_to_string(a);
        }
        run.expect(par("n", n, "part", "peaks"), bad.empty(), "increases at non-first peaks", bad);
    }
}

// Delta_{h_j} applied to g (j = 0 is the identity)
SymFunc with_h(int j, const SymFunc& g) { return j ? delta_op(SymFunc::h(j), g) : g; }

void cat_conj(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("agree n", n));
        run.equal(par("n", n, "part", "cat=catmod"), cat4(n), catmod4(n));
    }
    for (int n = 1; n <= run.op_cap(); ++n) {
        run.progress(par("operator n", n));
        MultiPoly c = cat4(n);
        for (int k : run.ks(0, n - 1)) {
            int m = n - k;
            auto hooks = schur_expand(remember(par("hnab", k, "m", m), [&] { return with_h(k, nabla(SymFunc::e(m))); }));
            for (int l = 0; l < m; ++l) {
                RatFunc lhs(c.coeff_extract(Z, k).coeff_extract(W, l));
                auto it = hooks.coeffs.find(hook(m, l));
                RatFunc nab = it == hooks.coeffs.end() ? RatFunc() : it->second;
                SymFunc g = with_h(k, delta_prime(SymFunc::e(m - l - 1), SymFunc::e(m)));
                RatFunc dp = schur_coeff(g, Partition(m, 1));
                run.equal(par("n", n, "k", k, "l", l, "form", "nabla"), nab, lhs);
                run.equal(par("n", n, "k", k, "l", l, "form", "delta-prime"), dp, lhs);
            }
        }
    }
}

void cat_sym(CheckRun& run) {
    for (int m = 1; m <= run.op_cap(); ++m) {
        run.progress(par("m", m));
        std::vector<std::pair<std::string, SymFunc>> fs{{"e", SymFunc::e(m)}, {"h", SymFunc::h(m)}};
        if (m >= 2) fs.emplace_back("s" + partition_to_string(hook(m, 1)), SymFunc::s(hook(m, 1)));
        for (int j = 0; j <= 2; ++j)
            for (const auto& [fname, f] : fs) {
                auto hooks = schur_expand(with_h(j, nabla(f)));
                for (int k : run.ks(1, m - 1)) {
                    auto it = hooks.coeffs.find(hook(m, k));
                    RatFunc lhs = it == hooks.coeffs.end() ? RatFunc() : it->second;
                    RatFunc rhs = schur_coeff(with_h(j, delta_prime(SymFunc::e(m - k - 1), f)), Partition(m, 1));
                    run.equal(par("m", m, "k", k, "gamma", j ? "Dh" + std::to_string(j) : std::string("id"), "f", fname), lhs, rhs);
                }
            }
    }
}

// Operator sides for the refinements exist only for registered externals:
// "E_<r>" of degree n - l, "C_<alpha>" of degree |alpha|.
void refined_operator(CheckRun& run, const std::string& params, const SymFunc& g, int l, const MultiPoly& zpoly) {
    int m = g.deg();
    auto hooks = schur_expand(with_h(l, nabla(g)));
    for (int k = 0; k < m; ++k) {
        RatFunc lhs(zpoly.coeff_extract(Z, k));
        auto it = hooks.coeffs.find(hook(m, k));
        run.equal(params + par(";k", k, "form", "nabla"), it == hooks.coeffs.end() ? RatFunc() : it->second, lhs);
        RatFunc dp = schur_coeff(with_h(l, delta_prime(SymFunc::e(m - k - 1), g)), Partition(m, 1));
        run.equal(params + par(";k", k, "form", "delta-prime"), dp, lhs);
    }
}

void cat_touch(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        MultiPoly sc, sm;
        for (int r = 1; r <= n; ++r) {
            MultiPoly c = cat4(n, r), m = catmod4(n, r);
            sc += c, sm += m;
            run.equal(par("n", n, "r", r), c, m);
            for (int l = 0; l < n; ++l)
                if (auto E = external("E_" + std::to_string(r), n - l))
                    refined_operator(run, par("n", n, "r", r, "l", l), *E, l, m.coeff_extract(W, l));
        }
        run.equal(par("n", n, "part", "sum-cat"), cat4(n), sc);
        run.equal(par("n", n, "part", "sum-catmod"), catmod4(n), sm);
    }
}

void cat_comp(CheckRun& run) {
    for (int n = 1; n <= run.comb_cap(); ++n) {
        run.progress(par("n", n));
        MultiPoly total;
        for (int l = 0; l < n; ++l)
            for (const auto& alpha : compositions(n - l)) {
                MultiPoly c = catmod4_comp(n, alpha);
                total += c * MultiPoly::var(W, l);
                if (auto C = external("C_" + comp_str(alpha), n - l))
                    refined_operator(run, par("n", n, "alpha", comp_str(alpha)), *C, l, c);
            }
        run.equal(par("n", n, "part", "sum"), catmod4(n), total);
    }
}

// ------------------------------------------------------- partial labelings

void eh(CheckRun& run) {
    for (int size = 1; size <= run.op_cap(); ++size)
        for (int l = 0; l < size; ++l) {
            int n = size - l;
            run.progress(par("n", n, "l", l));
            for (auto v : {PartialDinv::Zeros, PartialDinv::Prime}) {
                const char* vname = v == PartialDinv::Zeros ? "zeros" : "prime";
                int low = min_partial_dinv(n, l, v);
                run.expect(par("n", n, "l", l, "dinv", vname, "part", "nonnegative"), low >= 0, ">= 0", std::to_string(low));
                if (low < 0) continue;
                MultiPoly side = partial_z_poly(n, l, v);
                for (int k : run.ks(0, n - 1)) {
                    const SymFunc& op = remember(par("eh", n, "l", l, "k", k), [&] {
                        return with_h(l, delta_prime(SymFunc::e(n - k - 1), SymFunc::e(n)));
                    });
                    run.equal(par("n", n, "l", l, "k", k, "dinv", vname), expand_vars(op, n), side.coeff_extract(Z, k));
                }
            }
        }
}

void eh_touch(CheckRun& run) {
    for (int size = 1; size <= run.op_cap(); ++size)
        for (int l = 0; l < size; ++l) {
            int n = size - l;
            run.progress(par("n", n, "l", l));
            for (auto v : {PartialDinv::Zeros, PartialDinv::Prime}) {
                if (min_partial_dinv(n, l, v) < 0) continue;
                MultiPoly sum;
                for (int r = 0; r <= n; ++r) sum += partial_z_poly(n, l, v, 0, r);
                run.equal(par("n", n, "l", l, "dinv", v == PartialDinv::Zeros ? "zeros" : "prime"), partial_z_poly(n, l, v), sum);
            }
        }
}

std::vector<CheckInfo> build_catalog() {
    using S = CheckStatus;
    std::vector<CheckInfo> c{
        {"bijections", S::Theorem, "phi, psi, theta and gamma are bijections transporting area and dinv", {0, 5}, {0, 6}, bijections},
        {"cat-comp", S::Theorem, "touch-composition refinement of Cat' (operator side for registered C_alpha)", {0, 6}, {0, 8}, cat_comp},
        {"cat-conj", S::Conjecture, "Cat = Cat' and its z^k w^l coefficients are the hook and e_n pairings", {4, 6}, {6, 8}, cat_conj},
        {"cat-sym", S::Theorem, "<G nabla f, s_(k+1,1^(m-k-1))> = <G Delta'_{e_(m-k-1)} f, e_m>", {4, 0}, {6, 0}, cat_sym},
        {"cat-touch", S::Conjecture, "Cat_{n,r} = Cat'_{n,r} (operator side for registered E_r)", {0, 6}, {0, 8}, cat_touch},
        {"cat4", S::Theorem, "four-variable Catalan evaluations, (z,w) and (q,t) symmetries, peak rule", {0, 6}, {0, 8}, cat4_check},
        {"decorating", S::Theorem, "rise, fall and valley decorated sums equal the product forms", {0, 5}, {0, 7}, decorating},
        {"delta-rise", S::Conjecture, "Rise_{n,k} = Delta'_{e_k} e_n", {4, 0}, {6, 0}, [](CheckRun& r) { path_side(r, false); }},
        {"delta-valley", S::Conjecture, "Val_{n,k} = Delta'_{e_k} e_n", {4, 0}, {6, 0}, [](CheckRun& r) { path_side(r, true); }},
        {"dinv-minus", S::Theorem, "dinv of a valley-decorated path is nonnegative", {0, 5}, {0, 7}, dinv_minus_check},
        {"eh", S::Conjecture, "partially labeled paths give Delta_{h_l} Delta'_{e_(n-k-1)} e_n", {4, 0}, {5, 0}, eh},
        {"eh-touch", S::Theorem, "touch-refined partial sums reassemble the full sum", {4, 0}, {5, 0}, eh_touch},
        {"eq3", S::Theorem, "Delta_{e_k} e_n = Delta'_{e_k} e_n + Delta'_{e_(k-1)} e_n, zero for k > n", {4, 0}, {6, 0}, eq3},
        {"htilde-battery", S::Theorem, "modified Macdonald validation battery", {4, 0}, {6, 0}, battery},
        {"k1", S::Theorem, "Delta_{e_1} e_n = Rise_{n,0} + Rise_{n,1} = sum_m s_(2^m,1^(n-2m)) sum_p [p]_{q,t}", {4, 6}, {6, 8}, k1},
        {"llt-sym", S::Theorem, "Rise_{n,k} is a sum of LLT polynomials, hence symmetric", {0, 5}, {0, 7}, llt_sym},
        {"minimaj-equi", S::Theorem, "inv, dinv, maj, minimaj are equidistributed on ordered multiset partitions", {0, 5}, {0, 7}, minimaj_equi},
        {"minimaj-min", S::Theorem, "minimaj is the least maj over within-block orderings", {0, 5}, {0, 5}, minimaj_min},
        {"omp", S::Theorem, "M_alpha coefficients at q=0 or t=0 are OSP statistic sums", {4, 0}, {6, 0}, omp},
        {"q=t=1", S::Theorem, "Rise_{n,k} + Rise_{n,k-1} at q=t=1 is binom(n,k)/(k+1) e_n[(k+1)X]", {0, 6}, {0, 8}, q1},
        {"schur-pos", S::Theorem, "q-scaled Delta_{e_k} e_n at t=1/q is Schur positive; [d]_q divides the q-binomial", {4, 0}, {6, 0}, schur_pos},
        {"t-recip", S::Theorem, "Delta_f e_n at t=1/q equals the plethystic closed form", {4, 0}, {6, 0}, t_recip},
        {"thm-zero", S::Theorem, "M_(1^n) coefficients agree at q=0 and t=0", {4, 0}, {6, 0}, thm_zero},
        {"val-sym", S::Conjecture, "Val_{n,k} is symmetric", {0, 5}, {0, 7}, val_sym},
        {"xy-diagrams", S::Theorem, "two-column Yamanouchi paths classify into XY types with the stated Schur counts", {0, 8}, {0, 10}, xy},
    };
    std::sort(c.begin(), c.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.name < b.name; });
    return c;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> c = build_catalog();
    return c;
}

const CheckInfo* find_check(const std::string& name) {
    for (const auto& c : check_catalog())
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> all_check_names() {
    std::vector<std::string> out;
    for (const auto& c : check_catalog()) out.push_back(c.name);
    return out;
}

CheckResult run_check(const std::string& name, const CheckConfig& cfg) {
    const CheckInfo* info = find_check(name);
    if (!info) throw std::invalid_argument("unknown check '" + name + "'");
    Caps caps = cfg.profile == Profile::Quick ? info->quick : info->full;
    if (cfg.n_max > 0) caps = {caps.op ? cfg.n_max : 0, caps.comb ? cfg.n_max : 0};
    CheckResult r{info->name, info->status, info->statement, {}, 0};
    auto start = std::chrono::steady_clock::now();
    CheckRun run(cfg, caps, r.cases, info->name);
    info->body(run);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report run_suite(const std::vector<std::string>& names, const CheckConfig& cfg) {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& n : sorted)
        if (!find_check(n)) throw std::invalid_argument("unknown check '" + n + "'");
    Report rep;
    for (const auto& n : sorted) rep.checks.push_back(run_check(n, cfg));
    return rep;
}

namespace {
std::string verdict(const CheckResult& c) {
    if (c.passed()) return "pass";
    return c.status == CheckStatus::Theorem ? "FAIL" : "mismatch";
}
}  // namespace

std::string report_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        long bad = std::count_if(c.cases.begin(), c.cases.end(), [](const CheckCase& x) { return !x.pass; });
        os << c.name << " [" << status_name(c.status) << "] " << verdict(c) << "  " << c.cases.size() << " cases";
        if (bad) os << ", " << bad << " failing";
        os << "  -- " << c.statement << '\n';
        for (const auto& x : c.cases)
            if (!x.pass) os << "    " << x.params << "\n      expected: " << x.expected << "\n      actual:   " << x.actual << '\n';
    }
    os << "summary: " << r.checks.size() << " checks, " << (r.theorem_failure() ? "theorem failure" : "all theorems pass")
       << ", " << r.conjecture_mismatches() << " conjecture mismatches\n";
    return os.str();
}

std::string report_structured(const Report& r) {
    std::ostringstream os;
    os << "checks=" << r.checks.size() << '\n';
    for (const auto& c : r.checks) {
        std::string p = "check." + c.name + ".";
        os << p << "status=" << status_name(c.status) << '\n';
        os << p << "result=" << verdict(c) << '\n';
        os << p << "cases=" << c.cases.size() << '\n';
        for (size_t i = 0; i < c.cases.size(); ++i) {
            const auto& x = c.cases[i];
            std::string q = p + "case." + std::to_string(i) + ".";
            os << q << "params=" << x.params << '\n';
            os << q << "result=" << (x.pass ? "pass" : "fail") << '\n';
            if (!x.pass) {
                os << q << "expected=" << x.expected << '\n';
                os << q << "actual=" << x.actual << '\n';
            }
        }
    }
    os << "theorem_failure=" << (r.theorem_failure() ? 1 : 0) << '\n';
    os << "conjecture_mismatches=" << r.conjecture_mismatches() << '\n';
    return os.str();
}

}  // namespace delta
