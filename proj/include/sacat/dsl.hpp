#pragma once

#include <string>

#include "sacat/group.hpp"

namespace sacat {

/// Group DSL (case-sensitive):
///   C<n>  cyclic;  D<n>  dihedral of order 2n;  Q8;
///   S<n>, A<n>  symmetric / alternating, n <= 6;
///   products with infix x, e.g. C2xC2xC2;
///   perm:(0 1 2)(3 4),(0 1)  closure of 0-based cycle generators.
/// Throws parse_error / unsupported_name / closure_too_large.
Group builtin(const std::string& spec);

inline constexpr uint32_t kClosureCap = 5000;

Group cyclic_group(uint32_t n);
Group dihedral_group(uint32_t n); // order 2n
Group quaternion_group();         // Q8
Group symmetric_group(uint32_t n);
Group alternating_group(uint32_t n);

/// Closure of explicit permutations given as image vectors on a common
/// domain. Element 0 is the identity; order follows BFS discovery.
Group permutation_closure(const std::vector<std::vector<uint32_t>>& gens,
                          const std::string& label, uint32_t cap = kClosureCap);

} // namespace sacat
