#pragma once

#include "eqc/lie_catalog.hpp"
#include "eqc/presentation.hpp"
#include "eqc/sullivan.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqc {

// ---------------------------------------------------------------------------
// Models of homogeneous spaces and two-sided quotients

// Name used for a classifying generator in the right-hand copy:
// p->pi, e->eps, c->kappa, q->r, t->s on the leading letters ("p1'" -> "pi1'").
std::string mirror_name(std::string_view name);

// The same restriction map with its target generators renamed by mirror_name.
RestrictionMap mirrored(const RestrictionMap& rho);

// Model (H_left (x) H_right (x) exterior(P_G), d) of the two-sided
// quotient, with d z = right(tau z) - left(tau z). Both maps start at H_G.
SullivanModel two_sided_model(const RestrictionMap& left, const RestrictionMap& right,
                              std::string label = {});

// Cartan algebra (H_K (x) exterior(P_G), d z = -rho(tau z)) of G/K.
SullivanModel cartan_model(const RestrictionMap& rho, std::string label = {});

// H_left (x)_{H_G} H_right, identifying the two images of each generator of H_G.
QuotientPresentation pushout_over(const RestrictionMap& left, const RestrictionMap& right,
                                  std::string label = {});

// Degrees of the primitives whose transgression restricts to zero; each one
// splits off a free exterior factor from the two-sided model.
std::vector<int> split_primitive_degrees(const RestrictionMap& rho);

// ---------------------------------------------------------------------------
// Grassmannian cases: G = SO(l+m), K0 = SO(l) x SO(m), l = 2n+alpha, m = 2k+beta.

enum class Variant { Oriented, Unoriented };
enum class Equivariance { Ordinary, LeftIsotropy, TwoSided };

struct GrassmannCase {
  int n = 1;
  int k = 1;
  int alpha = 0;
  int beta = 0;
  Variant variant = Variant::Oriented;
  Equivariance equivariance = Equivariance::TwoSided;

  int ell() const { return 2 * n + alpha; }
  int m() const { return 2 * k + beta; }
  int dimension() const { return ell() * m(); }
  bool equal_rank() const { return alpha * beta == 0; }

  GroupDescriptor group() const { return GroupDescriptor::SO(ell() + m()); }
  GroupDescriptor isotropy() const;

  // Rejects n < 1, k < 1 and alpha, beta outside {0, 1}.
  void validate() const;

  GrassmannCase with(Variant v) const;
  GrassmannCase with(Equivariance e) const;

  std::string code() const;  // "n=1,k=1,a=0,b=0,oriented,two-sided"
  bool operator==(const GrassmannCase&) const = default;
};

// Accepts comma-separated tokens n=, k=, a= (or alpha=), b= (or beta=),
// oriented|unoriented and ordinary|left-isotropy|two-sided. Throws
// std::invalid_argument on anything else or on a degenerate case.
GrassmannCase parse_case(std::string_view text);

// min(l*m + 4, 24)
int default_cutoff(const GrassmannCase& c);

// Tacit relations e^2 = p_n: substitute p_n := e^2 (generators as in H_SO(2n)),
// or keep p_n as a generator and add e^2 - p_n explicitly.
enum class TacitForm { Substituted, Explicit };

// The presented ring for the case. Two-sided and left-isotropy give the
// equivariant ring of the isotropy action; ordinary gives the ring of G/K,
// obtained by adding every right-hand generator as a relation.
QuotientPresentation he_presentation(const GrassmannCase& c, TacitForm form = TacitForm::Substituted);

// The model over the connected group K0 (the oriented model, also for
// unoriented cases). Ordinary: Cartan algebra. Otherwise: two-sided model.
SullivanModel build_model(const GrassmannCase& c);

// Deck-group action of K/K0 on an algebra carrying the oriented generators:
// one involution negating e, e' and, unless `ordinary`, one negating eps, eps'.
SignAction covering_action(const AlgebraPtr& algebra, bool ordinary);

// ---------------------------------------------------------------------------
// Verification

struct DegreeVerdict {
  int degree = 0;
  long long a = 0;
  long long b = 0;
  bool match = false;
};

struct CrossCheck {
  std::string name;
  HilbertTable got;
  HilbertTable expected;
  bool match = false;
};

struct VerificationReport {
  std::string check;    // equivariant | ordinary | pushout | formality
  std::string subject;  // case code or group pair
  int cutoff = 0;
  std::string label_a;
  std::string label_b;
  HilbertTable a;
  HilbertTable b;
  std::vector<DegreeVerdict> degrees;
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> notes;
  bool pass = false;
};

// Model pipeline against presentation pipeline for the case. Ordinary cases
// are delegated to verify_corollary.
VerificationReport verify_case(const GrassmannCase& c, int max_degree);
// Cartan algebra against the presented ring of G/K, plus Poincare duality
// for even-dimensional oriented cases.
VerificationReport verify_corollary(const GrassmannCase& c, int max_degree);
// Two-sided model (split exterior factors divided out) against the pushout ring.
VerificationReport verify_pushout_equivalence(const GrassmannCase& c, int max_degree);
// Two-sided model against Hilb(H_K0) * Poincare(G/K0).
VerificationReport verify_formality_factorization(const GrassmannCase& c, int max_degree);

// The same checks for an arbitrary block pair K = K1 x K2 <= G.
VerificationReport verify_pushout_equivalence(const GroupDescriptor& G, const GroupDescriptor& K,
                                              int max_degree);
VerificationReport verify_formality_factorization(const GroupDescriptor& G,
                                                  const GroupDescriptor& K, int max_degree);

// Every check that applies to the case, in a fixed order: verify_case, then
// the pushout check (oriented two-sided) or the formality check (oriented
// left-isotropy).
std::vector<VerificationReport> verify_applicable(const GrassmannCase& c, int max_degree);

// n, k in {1, 2}, all alpha, beta, both variants, all three equivariance kinds.
std::vector<GrassmannCase> small_cases();

}  // namespace eqc
