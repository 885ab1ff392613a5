#pragma once

#include "delta/dyck.hpp"
#include "delta/partition.hpp"

#include <vector>

namespace delta {

// Which monomials x^c of the label generating function get computed.
//  AllWords:     every weak composition of n into N parts (the full N-variable truncation)
//  Compositions: x^alpha for strong compositions alpha (the M_alpha coefficients)
//  Partitions:   x^lambda for partitions lambda (enough for a symmetric result)
enum class Contents { AllWords, Compositions, Partitions };

std::vector<std::vector<int>> content_list(int n, int N, Contents mode);

// How the z-weight of each path is produced.
//  Product:   expand the product attached to rises / contractible valleys
//  Decorated: sum over decoration sets (rise rows, fall columns, valley rows)
enum class Route { Product, RiseDecorated, FallDecorated };

struct GfOptions {
    int N = 0;  // 0 means N = n
    Contents contents = Contents::AllWords;
    Route route = Route::Product;
    int min_z = 0;  // skip paths whose z-degree cannot reach min_z
};

// Sum over labeled paths of q^dinv t^area prod_{rises}(1 + z t^{-a_i}) x^P,
// every z-degree at once; the coefficient of z^{n-k-1} is the rise side for k.
MultiPoly rise_z_poly(int n, const GfOptions& opt = {});
// same with prod_{valleys}(1 + z q^{-(d_i+1)})
MultiPoly val_z_poly(int n, const GfOptions& opt = {});

MultiPoly rise_gf(int n, int k, const GfOptions& opt = {});
MultiPoly val_gf(int n, int k, const GfOptions& opt = {});

// coefficient of x^content (content padded with zeros) keeping q,t,z,...
MultiPoly x_coeff(const MultiPoly& p, const std::vector<int>& content);

}  // namespace delta
