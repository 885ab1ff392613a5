#pragma once

#include "delta/dyck.hpp"
#include "delta/partition.hpp"
#include "delta/pathgf.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace delta {

// A path under a leaning stack. diag holds the 1-based rows whose stack box sits
// diagonally above the one below (row 1 always included, |diag| = k+1); x[i] is the
// column of the north step in row i+1.
struct StackShape {
    std::vector<int> diag;
    std::vector<int> x;
    bool operator==(const StackShape&) const = default;
    auto operator<=>(const StackShape&) const = default;
};

struct StackPath {
    std::vector<int> diag;
    std::vector<int> x;
    std::vector<int> labels;
    StackShape shape() const { return {diag, x}; }
    bool operator==(const StackPath&) const = default;
    auto operator<=>(const StackPath&) const = default;
};

// column of the stack box in each row
std::vector<int> stack_columns(int n, const std::vector<int>& diag);
bool is_stack_shape(const StackShape& s);
bool is_stack_path(const StackPath& p);
std::vector<char> stack_strict_rows(const std::vector<int>& x);

// squares between path and stack, per row
std::vector<int> stack_area_vector(const StackShape& s);
int stack_area(const StackShape& s);
// boxes of the stack below the square right of each north step, in its column
std::vector<int> stack_heights(const StackShape& s);
int wdinv(const StackPath& p);
int hdinv(const StackPath& p);
// labels read from the largest height down, right to left within a height
std::vector<int> reading_word(const StackPath& p);
bool is_yamanouchi(const std::vector<int>& w);

std::vector<StackShape> stack_shapes(int n, int k);
void for_each_stack_path(int n, int k, int N, const std::function<void(const StackPath&)>& fn);

// decorated statistics: columns in F (rows in V) drop out, each valley in V costs one
int area_minus(const LabeledPath& p, const std::vector<int>& F);
int dinv_minus(const LabeledPath& p, const std::vector<int>& V);
std::vector<std::vector<int>> subsets_of(const std::vector<int>& s);

// Fall columns F -> vertical stack boxes (area drops to area minus, dinv becomes hdinv)
StackPath phi(const LabeledPath& p, const std::vector<int>& falls_chosen);
std::pair<LabeledPath, std::vector<int>> phi_inverse(const StackPath& s);
// valley rows V -> vertical stack boxes (area kept, dinv minus becomes wdinv)
StackPath psi(const LabeledPath& p, const std::vector<int>& valleys_chosen);
std::pair<LabeledPath, std::vector<int>> psi_inverse(const StackPath& s);

// Densely labeled paths: a Dyck path of order k+1 whose squares touching the path
// carry sets. Squares are kept in row order, north square first in each row.
struct DenseSquare {
    int col = 0, row = 0;
    bool north = false;
    std::vector<int> entries;  // increasing
    bool operator==(const DenseSquare&) const = default;
    auto operator<=>(const DenseSquare&) const = default;
};

struct DensePath {
    AreaVec path;
    std::vector<DenseSquare> squares;
    bool operator==(const DensePath&) const = default;
    auto operator<=>(const DensePath&) const = default;
};

// the empty squares of a Dyck path in canonical order
std::vector<DenseSquare> dense_frame(const AreaVec& path);
// east_below_north: a nonempty east square directly below a north square must
// stay below it in value, as column-strictness of the stack path requires
bool is_dense_path(const DensePath& d, bool east_below_north = true);
int dense_size(const DensePath& d);
int dense_area(const DensePath& d);
// Pairs (r, s) with r the least entry of a north square, s in a square strictly
// east, r < s on equal area or r > s one diagonal higher; minus the east entries.
// Letting minima of east squares count too breaks the transport under theta.
int dense_wdinv(const DensePath& d, bool north_minima_only = true);
Mono dense_content(const DensePath& d);
std::string to_string(const DensePath& d);  // "(col,row){a,b} ..."

DensePath theta(const StackPath& s);
StackPath theta_inverse(const DensePath& d);

void for_each_dense_path(int n, int k, int N, bool east_below_north, const std::function<void(const DensePath&)>& fn);

// The same z-graded polynomials as rise_z_poly / val_z_poly, computed by
// summing over stack paths (hdinv or wdinv) or densely labeled paths.
MultiPoly stack_rise_z_poly(int n, const GfOptions& opt = {});
MultiPoly stack_val_z_poly(int n, const GfOptions& opt = {});
MultiPoly dense_val_z_poly(int n, const GfOptions& opt = {}, bool east_below_north = true);

// sum of q^hdinv x^P over labelings of one stack shape, labels in 1..N
MultiPoly llt(const StackShape& s, int N);
// Schur coefficients from Yamanouchi reading words with partition content
std::map<Partition, MultiPoly> yamanouchi_schur(const StackShape& s);

}  // namespace delta
