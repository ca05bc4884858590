#include "doctest.h"

#include "eqc/grassmann.hpp"
#include "oracle_tables.hpp"

#include <stdexcept>

using namespace eqc;

namespace {

HilbertTable table(std::vector<long long> dims) { return HilbertTable{std::move(dims)}; }

GrassmannCase make(int n, int k, int a, int b, Variant v, Equivariance e) { return {n, k, a, b, v, e}; }

}  // namespace

TEST_CASE("case parsing") {
  const auto c = parse_case("n=1,k=2,a=0,b=1,unoriented,ordinary");
  CHECK(c == make(1, 2, 0, 1, Variant::Unoriented, Equivariance::Ordinary));
  CHECK(c.code() == "n=1,k=2,a=0,b=1,unoriented,ordinary");
  CHECK(parse_case(c.code()) == c);
  CHECK(parse_case("n=2, k=1, alpha=1, beta=0").code() == "n=2,k=1,a=1,b=0,oriented,two-sided");
  CHECK_THROWS_AS(parse_case("n=0,k=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case("n=1,k=1,a=2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case("n=1,k=1,bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case("n=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case("m=3"), std::invalid_argument);
}

TEST_CASE("default cutoff") {
  CHECK(default_cutoff(make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided)) == 8);
  CHECK(default_cutoff(make(2, 2, 1, 1, Variant::Oriented, Equivariance::TwoSided)) == 24);
  CHECK(small_cases().size() == 96);
}

TEST_CASE("presented ring for (1,1,0,0) two-sided") {
  const auto p = he_presentation(make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided));
  std::vector<std::string> names;
  for (const auto& g : p.algebra->generators()) names.push_back(g.name + "(" + std::to_string(g.degree) + ")");
  CHECK(names == std::vector<std::string>{"e(2)", "e'(2)", "eps(2)", "eps'(2)"});
  auto g = [&](const char* n) { return Element::generator(p.algebra, n); };
  const auto comps = p.relation_components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == g("e") * g("e") + g("e'") * g("e'") - g("eps") * g("eps") - g("eps'") * g("eps'"));
  CHECK(comps[1] == g("e") * g("e") * g("e'") * g("e'") - g("eps") * g("eps") * g("eps'") * g("eps'"));
  CHECK(comps[2] == g("e") * g("e'") - g("eps") * g("eps'"));
  CHECK(hilbert_function(p, 12) == table({1, 0, 4, 0, 8, 0, 12, 0, 16, 0, 20, 0, 24}));
}

TEST_CASE("presented ring for (1,1,1,1) two-sided has a free odd factor") {
  const auto p = he_presentation(make(1, 1, 1, 1, Variant::Oriented, Equivariance::TwoSided));
  CHECK(p.algebra->find("eta"));
  CHECK(p.algebra->generator(p.algebra->index_of("eta")).degree == 5);
  CHECK(p.relation_components().size() == 2);
  CHECK(hilbert_function(p, 9) == table({1, 0, 0, 0, 3, 1, 0, 0, 5, 3}));
}

TEST_CASE("presented ring for (1,1,0,1) unoriented") {
  const auto p = he_presentation(make(1, 1, 0, 1, Variant::Unoriented, Equivariance::TwoSided));
  std::vector<std::string> names;
  for (const auto& g : p.algebra->generators()) names.push_back(g.name);
  CHECK(names == std::vector<std::string>{"p1", "p1'", "pi1", "pi1'"});
  CHECK(p.relation_components().size() == 2);
}

TEST_CASE("explicit and substituted tacit relations agree") {
  for (const auto& c : small_cases()) {
    if (c.variant != Variant::Oriented || c.equivariance == Equivariance::LeftIsotropy || c.n + c.k > 3) continue;
    CAPTURE(c.code());
    const int D = default_cutoff(c);
    CHECK(hilbert_function(he_presentation(c, TacitForm::Explicit), D) == hilbert_function(he_presentation(c), D));
  }
}

TEST_CASE("models for (1,1,0,0)") {
  const auto two = build_model(make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided));
  CHECK_FALSE(validate(two));
  const auto& b = two.base();
  auto g = [&](const char* n) { return Element::generator(b, n); };
  REQUIRE(two.fiber().size() == 2);
  CHECK(two.differential().at("z3") == g("eps") * g("eps") + g("eps'") * g("eps'") - g("e") * g("e") - g("e'") * g("e'"));
  CHECK(two.differential().at("eta") == g("eps") * g("eps'") - g("e") * g("e'"));

  const auto cartan = build_model(make(1, 1, 0, 0, Variant::Oriented, Equivariance::Ordinary));
  const auto& k = cartan.base();
  auto h = [&](const char* n) { return Element::generator(k, n); };
  CHECK(cartan.differential().at("z3") == -(h("e") * h("e")) - h("e'") * h("e'"));
  CHECK(cartan.differential().at("eta") == -(h("e") * h("e'")));
}

TEST_CASE("model for (1,1,1,1) two-sided") {
  const auto m = build_model(make(1, 1, 1, 1, Variant::Oriented, Equivariance::TwoSided));
  std::vector<std::string> fiber;
  for (const auto& z : m.fiber()) fiber.push_back(z.name + "(" + std::to_string(z.degree) + ")");
  CHECK(fiber == std::vector<std::string>{"z3(3)", "z7(7)", "eta(5)"});
  CHECK(m.differential().at("eta").is_zero());
  std::vector<std::string> base;
  for (const auto& g : m.base()->generators()) base.push_back(g.name);
  CHECK(base == std::vector<std::string>{"p1", "p1'", "pi1", "pi1'"});
}

TEST_CASE("both pipelines reproduce the oracle tables") {
  for (const auto& row : oracle::grassmann_rows()) {
    const GrassmannCase oriented = make(row.n, row.k, row.alpha, row.beta, Variant::Oriented, Equivariance::TwoSided);
    CAPTURE(oriented.code());
    const int D = row.cutoff;
    REQUIRE(D == default_cutoff(oriented));
    const auto unoriented = oriented.with(Variant::Unoriented);
    const auto ordinary = oriented.with(Equivariance::Ordinary);
    const auto ordinary_unoriented = ordinary.with(Variant::Unoriented);

    CHECK(hilbert_function(he_presentation(oriented), D).dims == row.oriented);
    CHECK(cohomology(build_model(oriented), D).table.dims == row.oriented);
    CHECK(hilbert_function(he_presentation(unoriented), D).dims == row.unoriented);
    CHECK(hilbert_function(he_presentation(ordinary), D).dims == row.ordinary);
    CHECK(cohomology(build_model(ordinary), D).table.dims == row.ordinary);
    CHECK(hilbert_function(he_presentation(ordinary_unoriented), D).dims == row.ordinary_unoriented);
  }
}

TEST_CASE("verification examples") {
  auto r = verify_case(make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided), 12);
  CHECK(r.pass);
  CHECK(r.a == table({1, 0, 4, 0, 8, 0, 12, 0, 16, 0, 20, 0, 24}));
  CHECK(r.degrees.size() == 13);

  r = verify_case(make(1, 1, 0, 0, Variant::Oriented, Equivariance::Ordinary), 4);
  CHECK(r.check == "ordinary");
  CHECK(r.pass);
  CHECK(r.a == table({1, 0, 2, 0, 1}));

  r = verify_case(make(1, 1, 1, 1, Variant::Oriented, Equivariance::TwoSided), 5);
  CHECK(r.pass);
  CHECK(r.a == table({1, 0, 0, 0, 3, 1}));

  r = verify_corollary(make(1, 1, 0, 1, Variant::Oriented, Equivariance::Ordinary), 6);
  CHECK(r.pass);
  CHECK(r.a == table({1, 0, 1, 0, 1, 0, 1}));

  r = verify_corollary(make(1, 1, 0, 0, Variant::Unoriented, Equivariance::Ordinary), 4);
  CHECK(r.pass);
  CHECK(r.b == table({1, 0, 0, 0, 1}));

  CHECK_THROWS_AS(verify_corollary(make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided), 4),
                  std::invalid_argument);
}

TEST_CASE("degree zero reports") {
  const auto r = verify_case(make(1, 1, 0, 1, Variant::Oriented, Equivariance::TwoSided), 0);
  CHECK(r.pass);
  CHECK(r.a == table({1}));
  CHECK(r.b == table({1}));
}

TEST_CASE("pushout and formality examples") {
  const auto base = make(1, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided);
  auto r = verify_pushout_equivalence(base, 12);
  CHECK(r.pass);
  r = verify_pushout_equivalence(make(1, 1, 1, 1, Variant::Oriented, Equivariance::TwoSided), 10);
  CHECK(r.pass);
  CHECK(r.b == table({1, 0, 0, 0, 3, 0, 0, 0, 5, 0, 0}));
  CHECK(r.notes == std::vector<std::string>{"divided by (1+q^5)"});

  r = verify_formality_factorization(base.with(Equivariance::LeftIsotropy), 12);
  CHECK(r.pass);
  r = verify_formality_factorization(make(1, 1, 1, 1, Variant::Oriented, Equivariance::LeftIsotropy), 13);
  CHECK(r.pass);

  r = verify_formality_factorization(GroupDescriptor::SO(3), parse_group("SO(2)xSO(1)"), 8);
  CHECK(r.pass);
  CHECK(r.a == table({1, 0, 2, 0, 2, 0, 2, 0, 2}));
}

TEST_CASE("Sp(1) x Sp(1) in Sp(2)") {
  const auto rho = block_restriction(GroupDescriptor::Sp(2), parse_group("Sp(1)xSp(1)"));
  const auto r = verify_pushout_equivalence(GroupDescriptor::Sp(2), parse_group("Sp(1)xSp(1)"), 16);
  CHECK(r.pass);
  auto ring = FreeCGA::make({{"p", 4}, {"p'", 4}, {"pi", 4}, {"pi'", 4}});
  const Element one = Element::constant(ring, Rational(1));
  auto g = [&](const char* n) { return Element::generator(ring, n); };
  const QuotientPresentation displayed{ring, {(one + g("p")) * (one + g("p'")) - (one + g("pi")) * (one + g("pi'"))}, ""};
  CHECK(hilbert_function(displayed, 16) == r.b);
  CHECK(split_primitive_degrees(rho).empty());
}

TEST_CASE("degenerate cases are rejected") {
  CHECK_THROWS_AS(he_presentation(make(0, 1, 0, 0, Variant::Oriented, Equivariance::TwoSided)), std::invalid_argument);
  CHECK_THROWS_AS(build_model(make(1, 0, 1, 1, Variant::Oriented, Equivariance::TwoSided)), std::invalid_argument);
}

TEST_CASE("mirror names") {
  CHECK(mirror_name("p1'") == "pi1'");
  CHECK(mirror_name("e'") == "eps'");
  CHECK(mirror_name("c2") == "kappa2");
  CHECK(mirror_name("q1") == "r1");
  CHECK(mirror_name("t3") == "s3");
  CHECK(mirror_name("x") == "r_x");
}
