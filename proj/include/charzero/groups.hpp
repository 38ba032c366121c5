#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "charzero/perm_group.hpp"

namespace charzero {

struct GroupSpecResult {
  PermGroup group;
  std::string label;  // canonical spec text
  std::set<std::string> family_tags;
};

/// PSL(2,q) acting on the projective line: [1:x] is point x, [0:1] is point q.
GroupSpecResult build_psl2(std::uint64_t q);

/// SL(2,q) acting on the q^2 - 1 nonzero row vectors; (a,b) is point a + q b - 1.
GroupSpecResult build_sl2(std::uint64_t q);

GroupSpecResult build_alternating(std::size_t n);
GroupSpecResult build_symmetric(std::size_t n);
GroupSpecResult build_cyclic(std::size_t n);

/// Dihedral group of order n (n even).
GroupSpecResult build_dihedral(std::size_t n);

/// Dicyclic group of order n (n divisible by 4), regular action.
GroupSpecResult build_dicyclic(std::size_t n);

/// The abelian group with the given odd invariants extended by inversion.
/// Throws DomainError for an even or unit invariant.
GroupSpecResult build_frobenius_c2(const std::vector<std::uint64_t>& invariants);

/// "Q8", "D8" or "SD16". Throws DomainError for unknown names.
GroupSpecResult build_named(const std::string& name);

/// Acts on the disjoint union of the two domains.
GroupSpecResult direct_product(const GroupSpecResult& a, const GroupSpecResult& b);

/// Wraps explicit generators; used for perm files and catalog entries.
GroupSpecResult from_generators(std::vector<Permutation> generators, std::size_t degree,
                                std::string label);

}  // namespace charzero
