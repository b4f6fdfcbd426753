#pragma once

#include "charlab/group.hpp"

namespace charlab {

/// Cyclic group of order n.
GroupPtr cyclic_group(int n);
/// Dihedral group; the parameter is the group order (even, >= 4).
GroupPtr dihedral_group(int order);
/// The quaternion group of order 8.
GroupPtr quaternion_group();
/// Symmetric group on n letters (permutations in lexicographic order).
GroupPtr symmetric_group(int n);
/// Alternating group on n letters.
GroupPtr alternating_group(int n);
/// SL(2,3), as 2x2 determinant-one matrices over GF(3).
GroupPtr sl_2_3();
/// The Frobenius group of order 21 (C7 x| C3).
GroupPtr frobenius_21();

} // namespace charlab
