#pragma once

#include "delta/stacks.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace delta {

// Two-column X/Y array of a path under a stack with at most two columns whose
// reading word is Yamanouchi. rows[h] = {left, right}, bottom row first, each
// ' ', 'X' or 'Y'. area is stored because a diagram without a right column does
// not show where the stack turns.
struct XYDiagram {
    int area = 0;
    std::vector<std::array<char, 2>> rows;
    bool operator==(const XYDiagram&) const = default;
};

enum class XYType { I, II };

// Type I: a left X rows, b XY rows, c XX rows, d single X rows (all on one side).
// Type II: a, b as above (b >= 1), c Y-only right rows (1 <= c <= a), d X-only right rows.
struct XYClass {
    XYType type = XYType::I;
    int a = 0, b = 0, c = 0, d = 0;
    bool tail_right = false;
    bool operator==(const XYClass&) const = default;
};

XYDiagram xy_diagram(const StackPath& p);
StackPath xy_inverse(const XYDiagram& d);
int xy_hdinv(const XYDiagram& d);
XYClass classify(const XYDiagram& d);  // throws std::logic_error when no type fits
std::string to_string(const XYDiagram& d);  // top row first, rows joined by '/'

// labelings with a Yamanouchi reading word of every shape in Stack_{n,0} and Stack_{n,1}
void for_each_two_column_yamanouchi(int n, const std::function<void(const StackPath&)>& fn);

// coefficient of t^j s_{2^m 1^{n-2m}} in Rise_{n,0} + Rise_{n,1}, keyed (m, j), from diagrams
std::map<std::pair<int, int>, MultiPoly> two_column_schur_table(int n);

}  // namespace delta
