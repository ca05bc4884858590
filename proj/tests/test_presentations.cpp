#include "doctest.h"

#include "eqc/presentation.hpp"

#include <stdexcept>

using namespace eqc;

namespace {

HilbertTable table(std::vector<long long> dims) { return HilbertTable{std::move(dims)}; }

}  // namespace

TEST_CASE("Hilbert function of S2 x S2") {
  auto alg = FreeCGA::make({{"e", 2}, {"e'", 2}});
  const Element e = Element::generator(alg, "e"), f = Element::generator(alg, "e'");
  const QuotientPresentation p{alg, {e * f, e * e + f * f}, "S2xS2"};
  CHECK(hilbert_function(p, 6) == table({1, 0, 2, 0, 1, 0, 0}));
  CHECK(hilbert_function(p, 6).checksum() == 4);
}

TEST_CASE("free presentations") {
  CHECK(hilbert_function(free_presentation(FreeCGA::make({{"p1", 4}})), 8) ==
        table({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(hilbert_function(free_presentation(FreeCGA::make({{"z", 3}})), 3) == table({1, 0, 0, 1}));
  CHECK(hilbert_function(free_presentation(FreeCGA::make({{"z", 3}})), 0) == table({1}));
  CHECK_THROWS_AS(hilbert_function(free_presentation(FreeCGA::make({{"z", 3}})), -1), std::invalid_argument);
}

TEST_CASE("relations involving odd generators") {
  // Q[u] (x) ext[z] / (u z): the ideal is spanned by monomial multiples.
  auto alg = FreeCGA::make({{"u", 2}, {"z", 3}});
  const Element u = Element::generator(alg, "u"), z = Element::generator(alg, "z");
  CHECK(hilbert_function({alg, {u * z}, ""}, 9) == table({1, 0, 1, 1, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("inhomogeneous relations split into components") {
  auto alg = FreeCGA::make({{"p", 4}, {"q", 4}});
  const Element one = Element::constant(alg, Rational(1));
  const Element p = Element::generator(alg, "p"), q = Element::generator(alg, "q");
  const QuotientPresentation ring{alg, {(one + p) * (one + q) - one}, ""};
  CHECK(hilbert_function(ring, 12) == table({1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("constant terms are inconsistent") {
  auto alg = FreeCGA::make({{"p", 4}});
  const QuotientPresentation bad{alg, {Element::generator(alg, "p") + Element::constant(alg, Rational(1))}, ""};
  CHECK_THROWS_WITH_AS(hilbert_function(bad, 4), "inconsistent presentation", std::invalid_argument);
}

TEST_CASE("invariant Hilbert functions") {
  auto alg = FreeCGA::make({{"e", 2}});
  const Element e = Element::generator(alg, "e");
  const QuotientPresentation p{alg, {power(e, 4)}, ""};
  const SignAction flip = SignAction::generated_by(alg, {{-1}});
  CHECK(flip.order() == 2);
  CHECK(invariant_hilbert_function(p, flip, 6) == table({1, 0, 0, 0, 1, 0, 0}));
  CHECK(invariant_hilbert_function(p, SignAction::trivial(alg), 6) == hilbert_function(p, 6));
}

TEST_CASE("actions must preserve the ideal") {
  auto alg = FreeCGA::make({{"e", 2}, {"f", 2}});
  const Element e = Element::generator(alg, "e"), f = Element::generator(alg, "f");
  const QuotientPresentation p{alg, {e - f}, ""};
  const SignAction flip = SignAction::generated_by(alg, {{-1, 1}});
  CHECK_THROWS_WITH_AS(invariant_hilbert_function(p, flip, 4), "action does not descend", std::invalid_argument);
}

TEST_CASE("sign actions") {
  auto alg = FreeCGA::make({{"e", 2}, {"f", 2}, {"p", 4}});
  const SignAction g = SignAction::generated_by(alg, {{-1, 1, 1}, {1, -1, 1}});
  CHECK(g.order() == 4);
  const Element e = Element::generator(alg, "e"), f = Element::generator(alg, "f");
  CHECK(g.average(e * f).is_zero());
  CHECK(g.average(e * e + f) == e * e);
  CHECK_THROWS_AS(SignAction::from_elements(alg, {{-1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignAction::from_elements(alg, {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignAction::generated_by(alg, {{2, 1, 1}}), std::invalid_argument);

  auto bigger = FreeCGA::make({{"e", 2}, {"x", 2}});
  const SignAction ext = g.extend_to(bigger);
  CHECK(ext.apply(1, Element::generator(bigger, "x")) == Element::generator(bigger, "x"));
}

TEST_CASE("averaging operator") {
  auto alg = FreeCGA::make({{"e", 2}, {"f", 2}});
  const Element e = Element::generator(alg, "e"), f = Element::generator(alg, "f");
  const QuotientPresentation p{alg, {e * f, e * e + f * f}, ""};
  const SignAction both = SignAction::generated_by(alg, {{-1, -1}});
  for (int d = 0; d <= 6; ++d) {
    const DenseMatrix P = averaging_operator(p, both, d);
    CHECK(multiply(P, P) == P);
    CHECK(trace(P) == Rational(static_cast<long>(invariant_hilbert_function(p, both, 6).at(d))));
  }
  CHECK(invariant_hilbert_function(p, both, 6) == table({1, 0, 0, 0, 1, 0, 0}));
}

TEST_CASE("pushouts") {
  auto u = FreeCGA::make({{"u", 4}});
  auto x = FreeCGA::make({{"x", 4}});
  auto y = FreeCGA::make({{"y", 4}});
  const auto X = free_presentation(x), Y = free_presentation(y);
  const auto glued = pushout(X, Y, {{Element::generator(x, "x"), Element::generator(y, "y")}});
  CHECK(hilbert_function(glued, 8) == table({1, 0, 0, 0, 1, 0, 0, 0, 1}));

  const auto tensor = pushout(X, Y, {});
  CHECK(hilbert_function(tensor, 8) == table({1, 0, 0, 0, 2, 0, 0, 0, 3}));

  auto z = FreeCGA::make({{"z", 2}});
  CHECK_THROWS_AS(pushout(X, free_presentation(z), {{Element::generator(x, "x"), Element::generator(z, "z")}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pushout(X, X, {}), std::invalid_argument);
}

TEST_CASE("pushout of two SO(2) x SO(2) rings over SO(4)") {
  auto left = FreeCGA::make({{"e", 2}, {"e'", 2}});
  auto right = FreeCGA::make({{"eps", 2}, {"eps'", 2}});
  auto g = [](const AlgebraPtr& a, const char* n) { return Element::generator(a, n); };
  const Element e = g(left, "e"), f = g(left, "e'"), E = g(right, "eps"), F = g(right, "eps'");
  const auto ring = pushout(free_presentation(left), free_presentation(right),
                            {{e * e + f * f, E * E + F * F}, {e * f, E * F}});
  CHECK(hilbert_function(ring, 6) == table({1, 0, 4, 0, 8, 0, 12}));
}

TEST_CASE("series helpers") {
  const HilbertTable a = table({1, 0, 1, 0, 1});
  const HilbertTable ext = table({1, 0, 0, 1, 0});
  const HilbertTable prod = series_product(a, ext, 4);
  CHECK(prod == table({1, 0, 1, 1, 1}));
  CHECK(divide_by_exterior(prod, 3) == a);
  CHECK(to_string(a) == "1 0 1 0 1");
}
