#include "eqc/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eqc {

// ---------------------------------------------------------------------------
// Generic builders

std::string mirror_name(std::string_view name) {
  std::size_t letters = 0;
  while (letters < name.size() && std::isalpha(static_cast<unsigned char>(name[letters]))) ++letters;
  const std::string head(name.substr(0, letters));
  const std::string tail(name.substr(letters));
  if (head == "p") return "pi" + tail;
  if (head == "e") return "eps" + tail;
  if (head == "c") return "kappa" + tail;
  if (head == "q") return "r" + tail;
  if (head == "t") return "s" + tail;
  return "r_" + std::string(name);
}

RestrictionMap mirrored(const RestrictionMap& rho) {
  std::vector<GeneratorDecl> gens = rho.target_ring->generators();
  for (auto& g : gens) g.name = mirror_name(g.name);
  auto target = FreeCGA::make(std::move(gens));
  std::vector<Element> rename;
  for (std::size_t i = 0; i < target->size(); ++i) rename.push_back(Element::generator(target, i));
  RestrictionMap out{rho.source, rho.target, rho.source_ring, target, {}};
  for (const auto& img : rho.images) out.images.push_back(substitute(img, target, rename));
  return out;
}

namespace {

void require_same_source(const RestrictionMap& left, const RestrictionMap& right) {
  if (!(left.source == right.source) || !left.source_ring->same_as(*right.source_ring))
    throw std::invalid_argument("restriction maps start at different groups");
}

// Transgression target of primitive i is classifying generator i of H_G.
Element transgression(const RestrictionMap& rho, std::size_t i) {
  return Element::generator(rho.source_ring, i);
}

}  // namespace

SullivanModel two_sided_model(const RestrictionMap& left, const RestrictionMap& right,
                              std::string label) {
  require_same_source(left, right);
  std::vector<GeneratorDecl> base_gens = left.target_ring->generators();
  for (const auto& g : right.target_ring->generators()) {
    if (left.target_ring->find(g.name))
      throw std::invalid_argument("two_sided_model: generator name clash '" + g.name + "'");
    base_gens.push_back(g);
  }
  auto base = FreeCGA::make(std::move(base_gens));
  const auto prims = primitive_generators(left.source);
  std::map<std::string, Element> d;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    const Element tau = transgression(left, i);
    d.emplace(prims[i].name, transport(right(tau), base) - transport(left(tau), base));
  }
  return SullivanModel(base, prims, std::move(d), std::move(label));
}

SullivanModel cartan_model(const RestrictionMap& rho, std::string label) {
  const auto prims = primitive_generators(rho.source);
  std::map<std::string, Element> d;
  for (std::size_t i = 0; i < prims.size(); ++i) d.emplace(prims[i].name, -rho(transgression(rho, i)));
  return SullivanModel(rho.target_ring, prims, std::move(d), std::move(label));
}

QuotientPresentation pushout_over(const RestrictionMap& left, const RestrictionMap& right,
                                  std::string label) {
  require_same_source(left, right);
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < left.source_ring->size(); ++i) {
    const Element g = Element::generator(left.source_ring, i);
    pairs.emplace_back(left(g), right(g));
  }
  return pushout(free_presentation(left.target_ring, "H_" + left.target.code()),
                 free_presentation(right.target_ring, "H_" + right.target.code()), pairs,
                 label.empty() ? "H_" + left.target.code() + " (x)_H_" + left.source.code() + " H_" +
                                     right.target.code()
                               : std::move(label));
}

std::vector<int> split_primitive_degrees(const RestrictionMap& rho) {
  std::vector<int> out;
  const auto prims = primitive_generators(rho.source);
  for (std::size_t i = 0; i < prims.size(); ++i)
    if (rho.images.at(i).is_zero()) out.push_back(prims[i].degree);
  return out;
}

// ---------------------------------------------------------------------------
// Cases

GroupDescriptor GrassmannCase::isotropy() const {
  return GroupDescriptor::product({GroupDescriptor::SO(ell()), GroupDescriptor::SO(m())});
}

void GrassmannCase::validate() const {
  if (n < 1 || k < 1)
    throw std::invalid_argument("degenerate case (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                "): n and k must be at least 1");
  if ((alpha != 0 && alpha != 1) || (beta != 0 && beta != 1))
    throw std::invalid_argument("alpha and beta must be 0 or 1");
}

GrassmannCase GrassmannCase::with(Variant v) const {
  GrassmannCase c = *this;
  c.variant = v;
  return c;
}

GrassmannCase GrassmannCase::with(Equivariance e) const {
  GrassmannCase c = *this;
  c.equivariance = e;
  return c;
}

std::string GrassmannCase::code() const {
  std::ostringstream out;
  out << "n=" << n << ",k=" << k << ",a=" << alpha << ",b=" << beta << ','
      << (variant == Variant::Oriented ? "oriented" : "unoriented") << ',';
  switch (equivariance) {
    case Equivariance::Ordinary:
      out << "ordinary";
      break;
    case Equivariance::LeftIsotropy:
      out << "left-isotropy";
      break;
    case Equivariance::TwoSided:
      out << "two-sided";
      break;
  }
  return out.str();
}

GrassmannCase parse_case(std::string_view text) {
  GrassmannCase c;
  std::string token;
  std::istringstream in{std::string(text)};
  auto number = [&](const std::string& key, const std::string& value) {
    if (value.empty() || value.size() > 4 ||
        !std::all_of(value.begin(), value.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
    return std::stoi(value);
  };
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                token.end());
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq != std::string::npos) {
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "n")
        c.n = number(key, value);
      else if (key == "k")
        c.k = number(key, value);
      else if (key == "a" || key == "alpha")
        c.alpha = number(key, value);
      else if (key == "b" || key == "beta")
        c.beta = number(key, value);
      else
        throw std::invalid_argument("unknown case parameter '" + key + "'");
    } else if (token == "oriented") {
      c.variant = Variant::Oriented;
    } else if (token == "unoriented") {
      c.variant = Variant::Unoriented;
    } else if (token == "ordinary") {
      c.equivariance = Equivariance::Ordinary;
    } else if (token == "left-isotropy") {
      c.equivariance = Equivariance::LeftIsotropy;
    } else if (token == "two-sided") {
      c.equivariance = Equivariance::TwoSided;
    } else {
      throw std::invalid_argument("unknown case token '" + token + "'");
    }
  }
  c.validate();
  return c;
}

int default_cutoff(const GrassmannCase& c) { return std::min(c.dimension() + 4, 24); }

// ---------------------------------------------------------------------------
// Presented rings

namespace {

std::string index_name(const std::string& stem, int j, const std::string& primes) {
  return stem + std::to_string(j) + primes;
}

// Generators and total class of one SO(2r + parity) block.
struct Block {
  int r;
  int parity;
  std::string primes;
};

// Classifying-ring generators of a block on one side (left: p, e; right: pi, eps).
void add_oriented_generators(std::vector<GeneratorDecl>& gens, const Block& b, bool right,
                             TacitForm form) {
  const std::string p = right ? "pi" : "p";
  const std::string e = right ? "eps" : "e";
  const int top = (b.parity == 0 && form == TacitForm::Substituted) ? b.r - 1 : b.r;
  for (int j = 1; j <= top; ++j) gens.push_back({index_name(p, j, b.primes), 4 * j});
  if (b.parity == 0) gens.push_back({e + b.primes, 2 * b.r});
}

// 1 + p_1 + ... + p_r, with p_r read as e^2 in the substituted even case.
Element oriented_total_class(const AlgebraPtr& alg, const Block& b, bool right, TacitForm form) {
  const std::string p = right ? "pi" : "p";
  const std::string e = right ? "eps" : "e";
  Element total = Element::constant(alg, Rational(1));
  for (int j = 1; j <= b.r; ++j) {
    if (b.parity == 0 && j == b.r && form == TacitForm::Substituted) {
      const Element euler = Element::generator(alg, e + b.primes);
      total += euler * euler;
    } else {
      total += Element::generator(alg, index_name(p, j, b.primes));
    }
  }
  return total;
}

Element unoriented_total_class(const AlgebraPtr& alg, const Block& b, bool right) {
  const std::string p = right ? "pi" : "p";
  Element total = Element::constant(alg, Rational(1));
  for (int j = 1; j <= b.r; ++j) total += Element::generator(alg, index_name(p, j, b.primes));
  return total;
}

std::string subject_label(const GrassmannCase& c) {
  const std::string tilde = c.variant == Variant::Oriented ? "G~" : "G";
  return tilde + std::to_string(c.m()) + "(R^" + std::to_string(c.ell() + c.m()) + ")";
}

QuotientPresentation oriented_ring(const GrassmannCase& c, TacitForm form) {
  const Block left{c.n, c.alpha, ""};
  const Block second{c.k, c.beta, "'"};
  std::vector<GeneratorDecl> gens;
  add_oriented_generators(gens, left, false, form);
  add_oriented_generators(gens, second, false, form);
  add_oriented_generators(gens, left, true, form);
  add_oriented_generators(gens, second, true, form);
  const bool eta = c.alpha == 1 && c.beta == 1;
  if (eta) gens.push_back({"eta", 2 * c.n + 2 * c.k + 1});
  auto alg = FreeCGA::make(std::move(gens));

  QuotientPresentation out{alg, {}, ""};
  out.relations.push_back(oriented_total_class(alg, left, false, form) *
                              oriented_total_class(alg, second, false, form) -
                          oriented_total_class(alg, left, true, form) *
                              oriented_total_class(alg, second, true, form));
  if (c.alpha == 0 && c.beta == 0)
    out.relations.push_back(Element::generator(alg, "e") * Element::generator(alg, "e'") -
                            Element::generator(alg, "eps") * Element::generator(alg, "eps'"));
  if (form == TacitForm::Explicit) {
    for (const auto& [b, right] : {std::pair{left, false}, {second, false}, {left, true}, {second, true}}) {
      if (b.parity != 0) continue;
      const std::string p = right ? "pi" : "p";
      const std::string e = right ? "eps" : "e";
      const Element euler = Element::generator(alg, e + b.primes);
      out.relations.push_back(euler * euler - Element::generator(alg, index_name(p, b.r, b.primes)));
    }
  }
  return out;
}

QuotientPresentation unoriented_ring(const GrassmannCase& c) {
  if (c.alpha == 1 && c.beta == 1) return oriented_ring(c, TacitForm::Substituted);
  const Block left{c.n, c.alpha, ""};
  const Block second{c.k, c.beta, "'"};
  const bool euler_pair = c.alpha == 0 && c.beta == 0;
  const int euler_degree = 2 * c.n + 2 * c.k;
  std::vector<GeneratorDecl> gens;
  for (bool right : {false, true}) {
    const std::string p = right ? "pi" : "p";
    for (const Block& b : {left, second})
      for (int j = 1; j <= b.r; ++j) gens.push_back({index_name(p, j, b.primes), 4 * j});
    if (euler_pair) gens.push_back({right ? "epseps'" : "ee'", euler_degree});
  }
  auto alg = FreeCGA::make(std::move(gens));

  QuotientPresentation out{alg, {}, ""};
  out.relations.push_back(unoriented_total_class(alg, left, false) * unoriented_total_class(alg, second, false) -
                          unoriented_total_class(alg, left, true) * unoriented_total_class(alg, second, true));
  if (euler_pair) {
    const Element x = Element::generator(alg, "ee'");
    const Element xi = Element::generator(alg, "epseps'");
    out.relations.push_back(x - xi);
    // (ee')^2 = e^2 (e')^2 = p_n p'_k, and likewise on the right.
    out.relations.push_back(x * x - Element::generator(alg, index_name("p", c.n, "")) *
                                        Element::generator(alg, index_name("p", c.k, "'")));
    out.relations.push_back(xi * xi - Element::generator(alg, index_name("pi", c.n, "")) *
                                          Element::generator(alg, index_name("pi", c.k, "'")));
  }
  return out;
}

bool is_right_generator(const std::string& name) {
  return name.rfind("pi", 0) == 0 || name.rfind("eps", 0) == 0;
}

}  // namespace

QuotientPresentation he_presentation(const GrassmannCase& c, TacitForm form) {
  c.validate();
  QuotientPresentation ring =
      c.variant == Variant::Oriented ? oriented_ring(c, form) : unoriented_ring(c);
  const std::string subject = subject_label(c);
  const std::string group = c.isotropy().code();
  if (c.equivariance != Equivariance::Ordinary) {
    ring.label = "H_" + group + "(" + subject + ")";
    return ring;
  }
  // Ordinary cohomology: mod out the right-hand generators, which turns
  // pp' - pi pi' into the components of pp' - 1.
  std::vector<Element> right;
  for (std::size_t i = 0; i < ring.algebra->size(); ++i)
    if (is_right_generator(ring.algebra->generator(i).name))
      right.push_back(Element::generator(ring.algebra, i));
  return ring.with_relations(right, "H(" + subject + ")");
}

SullivanModel build_model(const GrassmannCase& c) {
  c.validate();
  const RestrictionMap rho = block_restriction(c.group(), c.isotropy());
  const std::string subject = subject_label(c.with(Variant::Oriented));
  if (c.equivariance == Equivariance::Ordinary) return cartan_model(rho, "Cartan algebra of " + subject);
  return two_sided_model(rho, mirrored(rho), "two-sided model of " + subject);
}

SignAction covering_action(const AlgebraPtr& algebra, bool ordinary) {
  std::vector<SignAction::Signs> gens;
  auto involution = [&](std::initializer_list<const char*> names) {
    SignAction::Signs s(algebra->size(), 1);
    bool any = false;
    for (const char* name : names)
      if (auto i = algebra->find(name)) {
        s[*i] = -1;
        any = true;
      }
    if (any) gens.push_back(std::move(s));
  };
  involution({"e", "e'"});
  if (!ordinary) involution({"eps", "eps'"});
  return SignAction::generated_by(algebra, gens);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

VerificationReport compare(std::string check, std::string subject, int cutoff, std::string label_a,
                           HilbertTable a, std::string label_b, HilbertTable b) {
  VerificationReport r;
  r.check = std::move(check);
  r.subject = std::move(subject);
  r.cutoff = cutoff;
  r.label_a = std::move(label_a);
  r.label_b = std::move(label_b);
  r.a = std::move(a);
  r.b = std::move(b);
  r.pass = true;
  for (int d = 0; d <= cutoff; ++d) {
    DegreeVerdict v{d, r.a.at(d), r.b.at(d), r.a.at(d) == r.b.at(d)};
    r.pass = r.pass && v.match;
    r.degrees.push_back(v);
  }
  return r;
}

void add_cross_check(VerificationReport& r, std::string name, HilbertTable got, HilbertTable expected) {
  const bool match = got == expected;
  r.cross_checks.push_back({std::move(name), std::move(got), std::move(expected), match});
  r.pass = r.pass && match;
}

HilbertTable truncate(const HilbertTable& t, int max_degree) {
  HilbertTable out{std::vector<long long>(max_degree + 1, 0)};
  for (int d = 0; d <= max_degree; ++d) out.dims[d] = t.at(d);
  return out;
}

void require_cutoff(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
}

}  // namespace

VerificationReport verify_case(const GrassmannCase& c, int max_degree) {
  c.validate();
  require_cutoff(max_degree);
  if (c.equivariance == Equivariance::Ordinary) return verify_corollary(c, max_degree);

  const GrassmannCase oriented = c.with(Variant::Oriented);
  const QuotientPresentation oriented_ring = he_presentation(oriented);
  const SullivanModel model = build_model(c);

  if (c.variant == Variant::Oriented) {
    auto r = compare("equivariant", c.code(), max_degree, "model", cohomology(model, max_degree).table,
                     "presentation", hilbert_function(oriented_ring, max_degree));
    add_cross_check(r, "explicit tacit relations",
                    hilbert_function(he_presentation(c, TacitForm::Explicit), max_degree), r.b);
    return r;
  }

  const SignAction action = covering_action(oriented_ring.algebra, false);
  auto r = compare("equivariant", c.code(), max_degree, "invariants of oriented ring",
                   invariant_hilbert_function(oriented_ring, action, max_degree), "presentation",
                   hilbert_function(he_presentation(c), max_degree));
  r.notes.push_back("covering group order " + std::to_string(action.order()));
  CohomologyOptions opts;
  opts.invariants = lift_to_model(model, covering_action(model.base(), false));
  add_cross_check(r, "invariant cohomology of oriented model", cohomology(model, max_degree, opts).table,
                  r.b);
  add_cross_check(r, "oriented model vs oriented presentation", cohomology(model, max_degree).table,
                  hilbert_function(oriented_ring, max_degree));
  return r;
}

VerificationReport verify_corollary(const GrassmannCase& c, int max_degree) {
  c.validate();
  require_cutoff(max_degree);
  if (c.equivariance != Equivariance::Ordinary)
    throw std::invalid_argument("verify_corollary needs an ordinary case, got " + c.code());

  const SullivanModel cartan = build_model(c);
  const int dim = c.dimension();
  const int full = std::max(max_degree, dim);

  if (c.variant == Variant::Unoriented) {
    CohomologyOptions opts;
    opts.invariants = lift_to_model(cartan, covering_action(cartan.base(), true));
    auto r = compare("ordinary", c.code(), max_degree, "invariant Cartan cohomology",
                     cohomology(cartan, max_degree, opts).table, "presentation",
                     hilbert_function(he_presentation(c), max_degree));
    const QuotientPresentation oriented = he_presentation(c.with(Variant::Oriented));
    add_cross_check(r, "invariants of oriented ring",
                    invariant_hilbert_function(oriented, covering_action(oriented.algebra, true), max_degree),
                    r.b);
    return r;
  }

  const HilbertTable cartan_table = cohomology(cartan, full).table;
  auto r = compare("ordinary", c.code(), max_degree, "Cartan algebra", truncate(cartan_table, max_degree),
                   "presentation", hilbert_function(he_presentation(c), max_degree));
  if (c.equal_rank()) {
    // Poincare duality of the closed orientable manifold G/K0 of dimension l*m.
    HilbertTable reversed{std::vector<long long>(full + 1, 0)};
    for (int d = 0; d <= full; ++d) reversed.dims[d] = d <= dim ? cartan_table.at(dim - d) : 0;
    add_cross_check(r, "Poincare duality", cartan_table, reversed);
  }
  return r;
}

VerificationReport verify_pushout_equivalence(const GroupDescriptor& G, const GroupDescriptor& K,
                                              int max_degree) {
  require_cutoff(max_degree);
  const RestrictionMap rho = block_restriction(G, K);
  const RestrictionMap right = mirrored(rho);
  const SullivanModel model = two_sided_model(rho, right);
  HilbertTable a = cohomology(model, max_degree).table;
  std::vector<std::string> notes;
  for (int deg : split_primitive_degrees(rho)) {
    a = divide_by_exterior(a, deg);
    notes.push_back("divided by (1+q^" + std::to_string(deg) + ")");
  }
  auto r = compare("pushout", K.code() + " <= " + G.code(), max_degree, "two-sided model", a, "pushout",
                   hilbert_function(pushout_over(rho, right), max_degree));
  r.notes = std::move(notes);
  return r;
}

VerificationReport verify_formality_factorization(const GroupDescriptor& G, const GroupDescriptor& K,
                                                  int max_degree) {
  require_cutoff(max_degree);
  const RestrictionMap rho = block_restriction(G, K);
  const HilbertTable equivariant = cohomology(two_sided_model(rho, mirrored(rho)), max_degree).table;
  const HilbertTable base = hilbert_function(free_presentation(rho.target_ring), max_degree);
  const HilbertTable ordinary = cohomology(cartan_model(rho), max_degree).table;
  auto r = compare("formality", K.code() + " <= " + G.code(), max_degree, "two-sided model", equivariant,
                   "Hilb(H_K) * Poincare(G/K)", series_product(base, ordinary, max_degree));
  r.notes.push_back("Poincare(G/K) = " + to_string(ordinary));
  return r;
}

VerificationReport verify_pushout_equivalence(const GrassmannCase& c, int max_degree) {
  c.validate();
  auto r = verify_pushout_equivalence(c.group(), c.isotropy(), max_degree);
  r.subject = c.code();
  // The presented ring keeps the free odd generator that the pushout splits off.
  HilbertTable presented = hilbert_function(
      he_presentation(c.with(Variant::Oriented).with(Equivariance::TwoSided)), max_degree);
  for (int deg : split_primitive_degrees(block_restriction(c.group(), c.isotropy())))
    presented = divide_by_exterior(presented, deg);
  add_cross_check(r, "pushout vs presented ring", r.b, presented);
  return r;
}

VerificationReport verify_formality_factorization(const GrassmannCase& c, int max_degree) {
  c.validate();
  auto r = verify_formality_factorization(c.group(), c.isotropy(), max_degree);
  r.subject = c.code();
  return r;
}

std::vector<VerificationReport> verify_applicable(const GrassmannCase& c, int max_degree) {
  std::vector<VerificationReport> out;
  out.push_back(verify_case(c, max_degree));
  if (c.variant == Variant::Oriented && c.equivariance == Equivariance::TwoSided)
    out.push_back(verify_pushout_equivalence(c, max_degree));
  if (c.variant == Variant::Oriented && c.equivariance == Equivariance::LeftIsotropy)
    out.push_back(verify_formality_factorization(c, max_degree));
  return out;
}

std::vector<GrassmannCase> small_cases() {
  std::vector<GrassmannCase> out;
  for (int n : {1, 2})
    for (int k : {1, 2})
      for (int a : {0, 1})
        for (int b : {0, 1})
          for (Variant v : {Variant::Oriented, Variant::Unoriented})
            for (Equivariance e : {Equivariance::TwoSided, Equivariance::LeftIsotropy, Equivariance::Ordinary})
              out.push_back({n, k, a, b, v, e});
  return out;
}

}  // namespace eqc
