#pragma once

#include "eqc/algebra.hpp"
#include "eqc/presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqc {

// Pure Sullivan algebra (base (x) exterior(fiber), d): d kills the even base
// generators and sends each odd fiber generator into the base.
class SullivanModel {
 public:
  // Stores the data as given; check it with validate(). Throws only when the
  // combined generator list is not a valid FreeCGA (e.g. a name clash).
  SullivanModel(AlgebraPtr base, std::vector<GeneratorDecl> fiber,
                std::map<std::string, Element> differential, std::string label = {});

  const AlgebraPtr& base() const { return base_; }
  const std::vector<GeneratorDecl>& fiber() const { return fiber_; }
  const std::map<std::string, Element>& differential() const { return differential_; }
  const std::string& label() const { return label_; }

  // Base generators followed by fiber generators.
  const AlgebraPtr& algebra() const { return algebra_; }

 private:
  AlgebraPtr base_;
  std::vector<GeneratorDecl> fiber_;
  std::map<std::string, Element> differential_;
  std::string label_;
  AlgebraPtr algebra_;
};

// Empty when the model is pure and every dz is homogeneous of degree |z|+1;
// otherwise a description of the first problem found.
std::optional<std::string> validate(const SullivanModel& model);

// Degree +1 derivation extending the assignment, with Koszul signs.
// x must live in model.algebra(). Throws on an invalid model.
Element apply_d(const SullivanModel& model, const Element& x);

struct CohomologyOptions {
  bool representatives = false;
  // Restricts to the subcomplex fixed by a sign action on model.algebra().
  // The action must commute with d.
  std::optional<SignAction> invariants;
};

struct CohomologyReport {
  HilbertTable table;
  std::vector<long long> slice_dims;  // dim C^d for 0 <= d <= D+1
  std::vector<long long> d_ranks;     // rank of d: C^d -> C^{d+1} for 0 <= d <= D
  // representatives[d] are cocycles whose classes form a basis of H^d.
  std::vector<std::vector<Element>> representatives;
};

// dims[d] = dim ker(d on C^d) - dim im(d from C^{d-1}), exactly.
CohomologyReport cohomology(const SullivanModel& model, int max_degree,
                            const CohomologyOptions& options = {});

// Extends a sign action on the base to model.algebra(), fixing every fiber
// generator. Throws std::invalid_argument unless the result commutes with d.
SignAction lift_to_model(const SullivanModel& model, const SignAction& base_action);

}  // namespace eqc
