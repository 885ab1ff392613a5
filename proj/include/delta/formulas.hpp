#pragma once

#include "delta/qnumbers.hpp"
#include "delta/symfunc.hpp"

#include <map>

namespace delta {

// sum_m s_{2^m 1^{n-2m}} sum_{p=m}^{n-m} [p]_{q,t}, Schur basis
SymFunc k1_formula(int n, QtZero zero = QtZero::Zero);
// binom(n,k)/(k+1) e_n[(k+1)X], 1 <= k <= n
SymFunc q1_formula(int n, int k);

// Dyck paths of order |lambda| whose vertical runs have lengths lambda
Rational run_type_count(const Partition& lambda);
std::map<Partition, long> run_type_census(int n);

}  // namespace delta
