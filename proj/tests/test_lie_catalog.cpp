#include "doctest.h"

#include "eqc/lie_catalog.hpp"

#include <stdexcept>

using namespace eqc;

namespace {

std::vector<std::string> generator_list(const GroupDescriptor& g) {
  std::vector<std::string> out;
  for (const auto& d : classifying_generators(g)) out.push_back(d.name + "(" + std::to_string(d.degree) + ")");
  return out;
}

}  // namespace

TEST_CASE("classifying rings") {
  using V = std::vector<std::string>;
  CHECK(generator_list(GroupDescriptor::SO(4)) == V{"p1(4)", "e(4)"});
  CHECK(generator_list(GroupDescriptor::SO(5)) == V{"p1(4)", "p2(8)"});
  CHECK(generator_list(GroupDescriptor::Torus(2)) == V{"t1(2)", "t2(2)"});
  CHECK(generator_list(GroupDescriptor::U(2)) == V{"c1(2)", "c2(4)"});
  CHECK(generator_list(GroupDescriptor::SU(3)) == V{"c2(4)", "c3(6)"});
  CHECK(generator_list(GroupDescriptor::Sp(2)) == V{"q1(4)", "q2(8)"});
  CHECK(generator_list(parse_group("SO(2)xSO(3)")) == V{"e(2)", "p1'(4)"});
}

TEST_CASE("primitive degrees") {
  CHECK(primitive_degrees(GroupDescriptor::SO(4)) == std::vector<int>{3, 3});
  CHECK(primitive_degrees(GroupDescriptor::SO(7)) == std::vector<int>{3, 7, 11});
  CHECK(primitive_degrees(GroupDescriptor::U(3)) == std::vector<int>{1, 3, 5});
  CHECK(primitive_degrees(GroupDescriptor::Sp(2)) == std::vector<int>{3, 7});
}

TEST_CASE("group codes") {
  CHECK(parse_group("SO(2)xSO(3)").code() == "SO(2)xSO(3)");
  CHECK(parse_group("Sp(2)") == GroupDescriptor::Sp(2));
  CHECK(parse_group("T(3)").rank() == 3);
  CHECK(parse_group("Spin(7)").rank() == 3);
  CHECK_THROWS_AS(parse_group("G(2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("SO(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("SO(4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
}

TEST_CASE("block restriction SO(2) x SO(2) in SO(4)") {
  const auto rho = block_restriction(GroupDescriptor::SO(4), parse_group("SO(2)xSO(2)"));
  const auto& k = rho.target_ring;
  const Element e = Element::generator(k, "e"), f = Element::generator(k, "e'");
  CHECK(rho.image_of("p1") == e * e + f * f);
  CHECK(rho.image_of("e") == e * f);
}

TEST_CASE("block restriction with an odd block kills the Euler class") {
  const auto rho = block_restriction(GroupDescriptor::SO(6), parse_group("SO(3)xSO(3)"));
  CHECK(rho.image_of("e").is_zero());
  const auto& k = rho.target_ring;
  const Element p = Element::generator(k, "p1"), q = Element::generator(k, "p1'");
  CHECK(rho.image_of("p1") == p + q);
  CHECK(rho.image_of("p2") == p * q);
}

TEST_CASE("block restriction rejects non-block pairs") {
  CHECK_THROWS_AS(block_restriction(GroupDescriptor::SO(5), parse_group("SO(2)xSO(2)")), std::invalid_argument);
  CHECK_THROWS_AS(block_restriction(GroupDescriptor::SO(4), parse_group("U(1)xU(1)")), std::invalid_argument);
  CHECK_THROWS_AS(block_restriction(GroupDescriptor::SO(4), GroupDescriptor::SO(2)), std::invalid_argument);
}

TEST_CASE("torus restriction convention") {
  const auto rho = torus_restriction(GroupDescriptor::SO(4));
  const auto& t = rho.target_ring;
  const Element t1 = Element::generator(t, "t1"), t2 = Element::generator(t, "t2");
  CHECK(rho.image_of("p1") == t1 * t1 + t2 * t2);
  CHECK(rho.image_of("e") == t1 * t2);
  // e^2 = p_n holds on the nose.
  const Element e = Element::generator(rho.source_ring, "e");
  CHECK(rho(e * e) == t1 * t1 * t2 * t2);
}

TEST_CASE("express in invariants") {
  const auto rho = torus_restriction(GroupDescriptor::SO(4));
  const auto& t = rho.target_ring;
  const Element t1 = Element::generator(t, "t1"), t2 = Element::generator(t, "t2");
  CHECK(express_in_invariants(t1 * t1 + t2 * t2, GroupDescriptor::SO(4)) ==
        Element::generator(rho.source_ring, "p1"));
  CHECK(express_in_invariants(t1 * t2, GroupDescriptor::SO(4)) == Element::generator(rho.source_ring, "e"));
  CHECK_THROWS_WITH_AS(express_in_invariants(t1, GroupDescriptor::SO(4)), "not Weyl-invariant / not expressible",
                       std::invalid_argument);
  CHECK_THROWS_AS(express_in_invariants(t1 * t1, GroupDescriptor::SO(4)), std::invalid_argument);
}

TEST_CASE("determinant involutions") {
  const SignAction so4 = determinant_involution(GroupDescriptor::SO(4));
  CHECK(so4.order() == 2);
  const auto& r = so4.algebra();
  CHECK(so4.apply(1, Element::generator(r, "p1")) == Element::generator(r, "p1"));
  CHECK(so4.apply(1, Element::generator(r, "e")) == -Element::generator(r, "e"));

  const SignAction first = determinant_involution(parse_group("SO(2)xSO(2)"), 0);
  const auto& k = first.algebra();
  CHECK(first.apply(1, Element::generator(k, "e")) == -Element::generator(k, "e"));
  CHECK(first.apply(1, Element::generator(k, "e'")) == Element::generator(k, "e'"));

  CHECK_THROWS_AS(determinant_involution(GroupDescriptor::SO(5)), std::invalid_argument);
  CHECK_THROWS_AS(determinant_involution(GroupDescriptor::U(2)), std::invalid_argument);
}

TEST_CASE("EG-oracle for a few groups") {
  for (const char* g : {"SO(4)", "SO(5)", "U(2)", "Sp(2)", "SU(3)", "T(2)", "SO(2)xSO(3)"}) {
    CAPTURE(g);
    const auto table = cohomology(universal_koszul_model(parse_group(g)), 16).table;
    CHECK(table.checksum() == 1);
  }
}
