#pragma once

#include "delta/dyck.hpp"
#include "delta/macdonald.hpp"
#include "delta/partition.hpp"

#include <vector>

namespace delta {

// Label-free statistics of an unlabeled Dyck path.
int catalan_dinv(const AreaVec& a);
std::vector<int> catalan_dinv_vector(const AreaVec& a);  // pairs counted at their lower row
std::vector<int> catalan_valleys(const AreaVec& a);      // 1-based rows i >= 2 with a_i <= a_{i-1}
std::vector<int> reading_order(const AreaVec& a);        // 1-based rows: area descending, then row descending
std::vector<int> reading_b(const AreaVec& a);            // b per reading position
std::vector<int> reading_b_rises(const AreaVec& a);      // reading positions p >= 2 (1-based) with b_p > b_{p-1}
std::vector<int> peak_rows(const AreaVec& a);            // 1-based rows followed by an east step
int touch_count(const AreaVec& a);                       // rows with a_i = 0

// Four-variable Catalan polynomials in q,t,z,w. touch < 0 means no restriction.
MultiPoly cat4(int n, int touch = -1);
MultiPoly catmod4(int n, int touch = -1);

// Decorate chosen rises with stars; alpha_j = i_{j+1} - i_j - stars strictly between,
// with i_{r+1} = n + 1. Result in q,t,z (the w-degree is n - |alpha|).
Composition touch_composition(const AreaVec& a, const std::vector<int>& stars);
MultiPoly catmod4_comp(int n, const Composition& alpha);

// coefficient of s_lam in f (any basis)
RatFunc schur_coeff(const SymFunc& f, const Partition& lam);
// the identity, Delta_{h_1} or Delta_{h_2}, selected by j = 0, 1, 2
SymFunc gamma_op(int j, const SymFunc& f);

// operator side for the z^k w^l coefficient of the Catalan polynomial of size n:
// <Delta_{h_k} nabla e_{n-k}, s_{l+1,1^{n-k-l-1}}> and <Delta_{h_k} Delta'_{e_{n-k-l-1}} e_{n-k}, e_{n-k}>
RatFunc cat_coeff_nabla(int n, int k, int l);
RatFunc cat_coeff_delta_prime(int n, int k, int l);

// <G nabla f, s_{k+1,1^{m-k-1}}> and <G Delta'_{e_{m-k-1}} f, e_m>, G = gamma_op(j)
RatFunc hook_side(int j, const SymFunc& f, int k);
RatFunc e_side(int j, const SymFunc& f, int k);

}  // namespace delta
