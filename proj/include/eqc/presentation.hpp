#pragma once

#include "eqc/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqc {

// Hilbert function of a graded object, dims[d] for 0 <= d <= max_degree().
struct HilbertTable {
  std::vector<long long> dims;

  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
  long long at(int d) const { return d >= 0 && d <= max_degree() ? dims[d] : 0; }
  long long checksum() const;
  bool operator==(const HilbertTable&) const = default;
};

std::string to_string(const HilbertTable& t);  // "1 0 2 0 1"

// Truncated power-series helpers on Hilbert tables.
HilbertTable series_product(const HilbertTable& a, const HilbertTable& b, int max_degree);
// Divides by 1 + q^degree (exact when the factor divides the series).
HilbertTable divide_by_exterior(const HilbertTable& a, int degree);

// A quotient of a free CGA. Each relation stands for the ideal generated by
// its homogeneous components. The ideal is the span of monomial multiples of
// those components; in a graded-commutative ring left multiples already give
// the two-sided ideal.
struct QuotientPresentation {
  AlgebraPtr algebra;
  std::vector<Element> relations;
  std::string label;

  // Nonzero homogeneous components of all relations, deduplicated, in
  // relation order. Throws std::invalid_argument("inconsistent presentation")
  // when some relation has a nonzero constant term.
  std::vector<Element> relation_components() const;

  // Copy with extra relations appended.
  QuotientPresentation with_relations(const std::vector<Element>& extra, std::string new_label) const;
};

// A finite group acting on generators by signs, extended multiplicatively.
class SignAction {
 public:
  using Signs = std::vector<int>;  // one entry in {+1,-1} per generator

  // Closes the given generators under composition. Always contains the identity.
  static SignAction generated_by(AlgebraPtr algebra, const std::vector<Signs>& generators);
  static SignAction trivial(AlgebraPtr algebra);
  // Checked constructor: the list must be closed and contain the identity.
  static SignAction from_elements(AlgebraPtr algebra, std::vector<Signs> elements);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Signs>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  int sign(std::size_t element, const Monomial& m) const;
  bool fixes(const Monomial& m) const;
  Element apply(std::size_t element, const Element& x) const;
  // Reynolds operator: average over the group.
  Element average(const Element& x) const;

  // Same action on another algebra, matching generators by name; generators
  // unknown to this action are fixed.
  SignAction extend_to(const AlgebraPtr& target) const;

 private:
  SignAction(AlgebraPtr algebra, std::vector<Signs> elements)
      : algebra_(std::move(algebra)), elements_(std::move(elements)) {}

  AlgebraPtr algebra_;
  std::vector<Signs> elements_;
};

// dims[d] = |monomials of degree d| - rank(ideal slice at d).
HilbertTable hilbert_function(const QuotientPresentation& p, int max_degree);

// Dimensions of the fixed subspaces of the induced action on each quotient
// slice. Throws std::invalid_argument("action does not descend") when some
// group element moves a relation component out of the ideal.
HilbertTable invariant_hilbert_function(const QuotientPresentation& p, const SignAction& action,
                                        int max_degree);

// Matrix of the group average on the degree-d quotient slice, in the basis
// of standard (non-pivot) monomials. Idempotent with trace equal to the
// invariant dimension.
DenseMatrix averaging_operator(const QuotientPresentation& p, const SignAction& action, int degree);

// left (x) right over a common base: generators are the disjoint union,
// relations are both relation lists plus x_left - x_right per pair.
// Generator names must not clash; paired elements must be homogeneous of
// equal degree (zero pairs with anything).
QuotientPresentation pushout(const QuotientPresentation& left, const QuotientPresentation& right,
                             const std::vector<std::pair<Element, Element>>& base_pairs,
                             std::string label = {});

// Free algebra seen as a presentation without relations.
QuotientPresentation free_presentation(AlgebraPtr algebra, std::string label = {});

}  // namespace eqc
