#pragma once

#include "delta/partition.hpp"
#include "delta/stacks.hpp"

#include <functional>
#include <string>
#include <vector>

namespace delta {

// Ordered multiset partition: blocks left to right, each an increasing set.
struct OSP {
    std::vector<std::vector<int>> blocks;
    bool operator==(const OSP&) const = default;
    auto operator<=>(const OSP&) const = default;
};

std::string to_string(const OSP& p);  // "13|23|14|234"; commas inside blocks once a value exceeds 9
OSP parse_osp(const std::string& s);
Composition osp_content(const OSP& p);
bool is_osp(const OSP& p);

// every OSP with content alpha and k blocks, exactly once
void for_each_osp(const Composition& alpha, int k, const std::function<void(const OSP&)>& fn);
std::vector<OSP> enumerate_osp(const Composition& alpha, int k);

int osp_inv(const OSP& p);
int osp_dinv(const OSP& p);
int osp_maj(const OSP& p);
std::vector<int> minimaj_word(const OSP& p);  // tau
int minimaj(const OSP& p);
// smallest major index over all within-block orderings (brute force)
int min_rearranged_maj(const OSP& p);

// OSP with k+1 blocks -> dense path of order k+1 with wdinv 0, area = minimaj
DensePath gamma(const OSP& p);
// throws std::invalid_argument when d is not an image of gamma
OSP gamma_inverse(const DensePath& d);

enum class OspStat { Inv, Dinv, Maj, Minimaj };
// sum over OSP(alpha, k) of q^stat
MultiPoly osp_gf(const Composition& alpha, int k, OspStat s);

}  // namespace delta
