#pragma once

#include "delta/dyck.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace delta {

// Dyck path of order n + l whose rows carry labels; label 0 marks one of the l
// empty rows, each of which must be a valley (preceded by an east step).
struct PartialPath {
    AreaVec a;
    std::vector<int> labels;
    bool operator==(const PartialPath&) const = default;
};

enum class PartialDinv {
    Zeros,  // empty rows read as label 0, then the usual dinv
    Prime   // empty rows contribute -1, their partners count unconditionally
};

bool is_partial_path(const PartialPath& p);
int empty_rows(const PartialPath& p);
// dinv pairs (i, j), 1-based, under the label-0 reading
std::vector<std::pair<int, int>> partial_dinv_pairs(const PartialPath& p);
std::vector<int> partial_dinv_vector(const PartialPath& p, PartialDinv v);
int partial_dinv(const PartialPath& p, PartialDinv v);
// rows with a_i = 0 that are not empty
int touch(const PartialPath& p);

// paths of order n + l with n labels in 1..N: area vector lex, empty-row sets lex, labels lex
void for_each_partial_path(int n, int l, int N, const std::function<void(const PartialPath&)>& fn);

// sum of q^dinv t^area x^P prod_{rises}(1 + z t^{-a_i}); touch < 0 means all.
// N = 0 means N = n. Throws std::domain_error if some dinv is negative.
MultiPoly partial_z_poly(int n, int l, PartialDinv v, int N = 0, int touch = -1);
// coefficient of z^k
MultiPoly partial_gf(int n, int l, int k, PartialDinv v, int N = 0, int touch = -1);
// least dinv value over all objects (a single label per content suffices: 1..N, N = n)
int min_partial_dinv(int n, int l, PartialDinv v);

}  // namespace delta
