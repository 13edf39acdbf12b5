#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sunada/group.hpp"

namespace sunada {

/// A group with two subgroups. The group is heap-allocated so the
/// subgroup handles stay valid when the triple is moved.
struct Triple {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  Subgroup h1;
  Subgroup h2;
};

namespace catalog {

FiniteGroup symmetric(std::size_t n);
FiniteGroup cyclic(std::size_t n);

/// S6 with H1 = <(0 1)(2 3), (0 2)(1 3)> and H2 = <(0 1)(2 3), (0 1)(4 5)>.
Triple gassmann();
/// Affine maps x -> ax + b on Z/8; H1 = {x, 3x, 5x, 7x}, H2 = {x, 3x+4, 5x+4, 7x}.
Triple gerst();
/// GL(3,2) on the seven nonzero vectors of F_2^3; stabilizers of a vector
/// and of a linear form.
Triple brooks_tse();
/// (Z/2 x Z/2 x Z/4) semidirect Z/6 on 16 + 6 points; both subgroups are
/// isomorphic to Z/2 x Z/4.
Triple barden_kang();
/// Order p^5 group ((Z/p^2 x Z/p) semidirect (Z/p)^2) in its regular action.
Triple guralnick(std::size_t p);
/// Upper unitriangular 3x3 matrices over F_p acting on F_p^3.
FiniteGroup heisenberg(std::size_t p);
/// S4 with H1 = <(0 1 2 3)> and H2 = <(0 1)(2 3), (0 2)(1 3)>.
Triple s4_cyclic_klein();
/// S3 with H1 = <(0 1)> and H2 = <(0 2)>.
Triple s3_transpositions();
/// Klein four-group with two distinct subgroups of order 2.
Triple klein_pair();

/// Looks up any of the named triples above ("gassmann", "gerst", ...,
/// "guralnick3", "guralnick5").
Triple by_name(const std::string& name);
std::vector<std::string> names();

/// Random triple with 2 <= |G| <= max_order: a permutation group on 3..7
/// points generated by one or two random elements, with cyclic or two-generated
/// subgroups, one of them sometimes a conjugate of the other. Every fifth draw
/// on average instead conjugates the subgroups of a small catalog triple.
Triple random_triple(std::mt19937_64& rng, std::size_t max_order = 120);

}  // namespace catalog

}  // namespace sunada
