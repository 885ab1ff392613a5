#pragma once

#include "delta/rational.hpp"

#include <string>
#include <vector>

namespace delta {

// weakly decreasing positive parts
using Partition = std::vector<int>;
// positive parts
using Composition = std::vector<int>;

int size_of(const std::vector<int>& parts);
bool is_partition(const std::vector<int>& parts);
Partition conjugate(const Partition& p);
Partition sorted_partition(std::vector<int> parts);  // drops zeros, sorts decreasing

// all partitions of n, reverse lexicographic: (n), (n-1,1), ..., (1^n)
const std::vector<Partition>& partitions(int n);
std::vector<Composition> compositions(int n);
// length-N vectors of nonnegative integers summing to n, lex decreasing
std::vector<std::vector<int>> weak_compositions(int n, int N);

Integer z_lambda(const Partition& p);  // size of the centralizer
Integer multinomial(const std::vector<int>& parts);

std::string partition_to_string(const std::vector<int>& p);  // "(2,1)"
std::vector<int> parse_partition(const std::string& s);

// the shape (2^m, 1^(n-2m)) and hook (k+1, 1^(n-k-1))
Partition two_column_shape(int n, int m);
Partition hook(int n, int k);

}  // namespace delta
