#pragma once

#include "eqc/algebra.hpp"
#include "eqc/presentation.hpp"
#include "eqc/sullivan.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqc {

// Compact connected Lie groups with known rational classifying rings.
// Spin groups carry the same rational data as the SO groups of equal size.
enum class Family { SOEven, SOOdd, SpinEven, SpinOdd, U, SU, Sp, Torus, Product };

struct GroupDescriptor {
  Family family = Family::Torus;
  int size = 0;                          // N in SO(N), U(N), Sp(N), ...; n in T(n)
  std::vector<GroupDescriptor> factors;  // Product only

  static GroupDescriptor SO(int n);
  static GroupDescriptor Spin(int n);
  static GroupDescriptor U(int n);
  static GroupDescriptor SU(int n);
  static GroupDescriptor Sp(int n);
  static GroupDescriptor Torus(int n);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  bool is_orthogonal() const;  // SO or Spin
  bool has_euler_class() const { return family == Family::SOEven || family == Family::SpinEven; }
  int rank() const;
  std::string code() const;  // e.g. "SO(4)", "SO(2)xSO(3)", "T(3)"

  bool operator==(const GroupDescriptor&) const = default;
};

// Parses codes like "SO(4)", "Spin(7)", "U(2)", "SU(3)", "Sp(2)", "T(3)" and
// 'x'-separated products. Exceptional groups and unknown names are rejected.
GroupDescriptor parse_group(std::string_view code);

// Classifying-ring generators. Factor i of a product gets i primes appended
// to its names (p1, e, p1', e', ...).
std::vector<GeneratorDecl> classifying_generators(const GroupDescriptor& g);
AlgebraPtr classifying_ring(const GroupDescriptor& g);

// Primitive generators of H(G); primitive i transgresses to classifying generator i.
std::vector<GeneratorDecl> primitive_generators(const GroupDescriptor& g);
std::vector<int> primitive_degrees(const GroupDescriptor& g);

// Ring map H_G -> H_K induced by a subgroup inclusion K <= G.
struct RestrictionMap {
  GroupDescriptor source;
  GroupDescriptor target;
  AlgebraPtr source_ring;
  AlgebraPtr target_ring;
  std::vector<Element> images;  // one per source generator, over target_ring

  Element operator()(const Element& x) const;
  Element image_of(std::string_view generator) const;
};

// first then second: H_A -> H_B -> H_C.
RestrictionMap compose(const RestrictionMap& first, const RestrictionMap& second);

// H_G -> H_T for the maximal torus T = T(rank G), coordinates t1..tr (for
// products the factors' coordinates are consecutive). Convention:
// p_j -> sigma_j(t_1^2, ..., t_n^2), e -> t_1...t_n, c_j -> sigma_j(t),
// q_j -> sigma_j(t^2). With it e^2 = p_n holds exactly.
RestrictionMap torus_restriction(const GroupDescriptor& g);

// H_G -> H_{G1 x G2} for a block-diagonal subgroup of the same family
// (SO/Spin, U or Sp). Total classes multiply; the Euler class goes to e*e'
// when both blocks are even-orthogonal and to 0 otherwise.
RestrictionMap block_restriction(const GroupDescriptor& G, const GroupDescriptor& K);

// Preimage of a homogeneous torus polynomial under torus_restriction(g).
// Throws std::invalid_argument("not Weyl-invariant / not expressible").
Element express_in_invariants(const Element& x, const GroupDescriptor& g);

// Reflection in one even-orthogonal factor: fixes every Pontrjagin class and negates e.
SignAction determinant_involution(const GroupDescriptor& g, std::size_t factor = 0);

// (H_G (x) exterior(P_G), z -> tau z): the model of EG, acyclic in positive degrees.
SullivanModel universal_koszul_model(const GroupDescriptor& g);

}  // namespace eqc
