#pragma once

#include "delta/multipoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace delta {

// a[i] = full squares between the path and the diagonal in row i+1
using AreaVec = std::vector<int>;

bool is_dyck(const AreaVec& a);
// all Dyck paths of order n, area vectors in lex order (memoized)
const std::vector<AreaVec>& dyck_paths(int n);

int area(const AreaVec& a);
// x-coordinate of the north step in each row
std::vector<int> north_x(const AreaVec& a);
// height of the east step in column j+1
std::vector<int> east_y(const AreaVec& a);
std::vector<int> column_areas(const AreaVec& a);

// Row and column numbers in these sets are 1-based.
std::vector<int> rises(const AreaVec& a);
std::vector<int> falls(const AreaVec& a);
// column whose east step closes the north step of row i
int matching_column(const AreaVec& a, int row);

struct LabeledPath {
    AreaVec a;
    std::vector<int> labels;  // positive; 0 marks an unlabeled row where allowed
    bool operator==(const LabeledPath&) const = default;
    auto operator<=>(const LabeledPath&) const = default;
};

bool is_labeled_path(const LabeledPath& p);
std::vector<int> dinv_vector(const LabeledPath& p);
int dinv(const LabeledPath& p);
std::vector<int> valleys(const LabeledPath& p);
Mono x_content(const std::vector<int>& labels);  // zero labels are skipped

// words over 1..N with w[i] > w[i-1] wherever strict[i]; lex order
void for_each_column_strict(const std::vector<char>& strict, int N, const std::function<void(const std::vector<int>&)>& fn);
// labeled paths of order n with labels in 1..N: area vector lex, then labels lex
void for_each_labeled_path(int n, int N, const std::function<void(const LabeledPath&)>& fn);
std::vector<char> column_strict_rows(const AreaVec& a);

// debugging / golden record: a=[..];l=[..];dec=[..]
std::string to_record(const LabeledPath& p, const std::vector<int>& dec = {});

}  // namespace delta
