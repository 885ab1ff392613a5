#pragma once

#include "delta/symfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace delta {

// French notation: row 0 is the bottom row, holding mu[0] cells
struct CellStats {
    int row = 0, col = 0;
    int coarm = 0;  // cells strictly left
    int coleg = 0;  // cells strictly below
    int arm = 0;    // cells strictly right
    int leg = 0;    // cells strictly above
};
std::vector<CellStats> cell_stats(const Partition& mu);

Alphabet bmu(const Partition& mu);
MultiPoly bmu_poly(const Partition& mu);
Mono tmu(const Partition& mu);

// Which pairs of cells in adjacent rows attack in the filling formula.
enum class Attack { UpperRight, UpperLeft };

// filling-formula generating function restricted to fillings of content x^content
MultiPoly htilde_content(const Partition& mu, const std::vector<int>& content, Attack rule = Attack::UpperRight);
// monomial expansion from partition contents
SymFunc htilde_fillings(const Partition& mu, Attack rule = Attack::UpperRight);
// all fillings with entries in 1..N
MultiPoly htilde_x_expansion(const Partition& mu, int N, Attack rule = Attack::UpperRight);

struct BatteryResult {
    bool ok = true;
    std::string failure;  // names the first failed identity
};
// per-polynomial identities; `full_symmetry` re-derives the x-expansion from fillings
BatteryResult validate_htilde(const Partition& mu, const SymFunc& h, bool full_symmetry, Attack rule = Attack::UpperRight);
// e2 = (H_{11} - H_{2}) / (t - q)
BatteryResult validate_e2_expansion();

// Validated monomial expansions, persisted per degree.
class MacdonaldCache {
public:
    static MacdonaldCache& instance();
    // empty string disables persistence; default from DELTA_CACHE_DIR
    void set_directory(const std::string& dir);
    std::string directory() const;
    const SymFunc& get(const Partition& mu);
    // all of degree n (loads or computes, validates, writes the file)
    void ensure_degree(int n);
    std::string file_path(int n) const;
    void clear_memory();
    void set_progress(std::function<void(const std::string&)> fn);

private:
    MacdonaldCache();
    bool load(int n);
    void store(int n);
    std::string dir_;
    std::map<Partition, SymFunc> table_;
    std::map<int, bool> ready_;
    std::function<void(const std::string&)> progress_;
};

const SymFunc& htilde(const Partition& mu);

// star scalar product: p_lambda orthogonal with weight (-1)^{n-l} z_lambda prod (1-q^li)(1-t^li)
RatFunc star_inner(const SymFunc& f, const SymFunc& g);

std::map<Partition, RatFunc> expand_in_htilde(const SymFunc& f);
// fraction-free elimination against the monomial expansions (slow; small degrees)
std::map<Partition, RatFunc> expand_in_htilde_elimination(const SymFunc& f);

SymFunc htilde_to_monomial(const SymFunc& f);
SymFunc monomial_to_htilde(const SymFunc& f);

// multiply the coefficient of H_mu by eigen(mu); result in the Htilde basis
SymFunc apply_eigen(const SymFunc& g, const std::function<RatFunc(const Partition&)>& eigen);
SymFunc delta_op(const SymFunc& f, const SymFunc& g);
SymFunc delta_prime(const SymFunc& f, const SymFunc& g);
SymFunc nabla(const SymFunc& g);

// Delta_{e_k} e_n = Delta'_{e_k} e_n + Delta'_{e_{k-1}} e_n, and vanishing for k > n
bool delta_identity_check(int n, int k);

// f[[n]_q] e_n[X [k+1]_q] / (q^{k(n-1)} [k+1]_q), k = deg f, in the monomial basis
SymFunc delta_t_recip(const SymFunc& f, int n);
// substitute t -> 1/q in every coefficient
SymFunc specialize_t_recip(const SymFunc& f);
SymFunc specialize_coeffs(const SymFunc& f, const Bindings& b);

// Symmetric functions not constructible here may be supplied by their Htilde expansions.
void register_external(const std::string& name, int n, const std::map<Partition, RatFunc>& htilde_coeffs);
std::optional<SymFunc> external(const std::string& name, int n);

}  // namespace delta
