#include "eqc/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqc {

long long HilbertTable::checksum() const { return std::accumulate(dims.begin(), dims.end(), 0LL); }

std::string to_string(const HilbertTable& t) {
  std::ostringstream out;
  for (std::size_t d = 0; d < t.dims.size(); ++d) out << (d ? " " : "") << t.dims[d];
  return out.str();
}

HilbertTable series_product(const HilbertTable& a, const HilbertTable& b, int max_degree) {
  HilbertTable out{std::vector<long long>(std::max(max_degree + 1, 0), 0)};
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j) out.dims[i + j] += a.at(i) * b.at(j);
  return out;
}

HilbertTable divide_by_exterior(const HilbertTable& a, int degree) {
  if (degree <= 0) throw std::invalid_argument("divide_by_exterior: degree must be positive");
  HilbertTable out{a.dims};
  for (int d = degree; d <= out.max_degree(); ++d) out.dims[d] -= out.dims[d - degree];
  return out;
}

// ---------------------------------------------------------------------------
// QuotientPresentation

std::vector<Element> QuotientPresentation::relation_components() const {
  std::vector<Element> out;
  for (const auto& r : relations) {
    if (r.algebra() != algebra && !r.algebra()->same_as(*algebra))
      throw std::invalid_argument("relation from a different algebra in '" + label + "'");
    for (auto& [deg, comp] : homogeneous_components(r)) {
      if (deg == 0) throw std::invalid_argument("inconsistent presentation");
      if (std::find(out.begin(), out.end(), comp) == out.end()) out.push_back(comp);
    }
  }
  return out;
}

QuotientPresentation QuotientPresentation::with_relations(const std::vector<Element>& extra,
                                                          std::string new_label) const {
  QuotientPresentation out = *this;
  for (const auto& r : extra) out.relations.push_back(transport(r, algebra));
  out.label = std::move(new_label);
  return out;
}

QuotientPresentation free_presentation(AlgebraPtr algebra, std::string label) {
  return QuotientPresentation{std::move(algebra), {}, std::move(label)};
}

namespace {

// Coordinates of m * comp in `slice`, where deg(m) + deg(comp) = slice.degree.
SparseVector multiple_coordinates(const FreeCGA& alg, const Monomial& m, const Element& comp,
                                  const DegreeSlice& slice) {
  SparseVector v;
  v.reserve(comp.terms().size());
  for (const auto& [cm, c] : comp.terms()) {
    auto prod = multiply_monomials(alg, m, cm);
    if (prod.sign == 0) continue;
    v.push_back({slice.index.at(prod.monomial), prod.sign > 0 ? Rational(c) : Rational(-c)});
  }
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.column < b.column;
  });
  // Distinct monomials m*cm are distinct, so no merging is needed.
  return v;
}

// Spanning set of the degree-d ideal slice.
template <typename Visit>
void for_each_ideal_vector(const FreeCGA& alg, const std::vector<Element>& comps, int d,
                           Visit&& visit) {
  const auto& slice = alg.slice(d);
  for (const auto& comp : comps) {
    const int e = *comp.degree();
    if (e > d) continue;
    for (const auto& m : alg.slice(d - e).basis) {
      auto v = multiple_coordinates(alg, m, comp, slice);
      if (!v.empty()) visit(std::move(v));
    }
  }
}

Echelon ideal_slice(const FreeCGA& alg, const std::vector<Element>& comps, int d) {
  Echelon ech(alg.slice(d).size());
  for_each_ideal_vector(alg, comps, d, [&](SparseVector v) {
    if (ech.rank() < ech.columns()) ech.insert(std::move(v));
  });
  return ech;
}

bool involves_odd_generator(const Element& x) {
  const FreeCGA& alg = *x.algebra();
  for (const auto& [m, c] : x.terms())
    if (alg.odd_length(m) > 0) return true;
  return false;
}

HilbertTable general_hilbert(const FreeCGA& alg, const std::vector<Element>& comps, int max_degree) {
  HilbertTable t{std::vector<long long>(max_degree + 1, 0)};
  for (int d = 0; d <= max_degree; ++d) {
    const auto& slice = alg.slice(d);
    t.dims[d] = static_cast<long long>(slice.size()) -
                static_cast<long long>(ideal_slice(alg, comps, d).rank());
  }
  return t;
}

}  // namespace

HilbertTable hilbert_function(const QuotientPresentation& p, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  const auto comps = p.relation_components();
  const FreeCGA& alg = *p.algebra;

  const bool split = alg.has_odd_generators() &&
                     std::none_of(comps.begin(), comps.end(), involves_odd_generator);
  if (!split) return general_hilbert(alg, comps, max_degree);

  // Relations live in the even subalgebra, so the quotient is
  // (even part / ideal) tensor the free exterior algebra on the odd generators.
  std::vector<GeneratorDecl> even, odd;
  for (const auto& g : alg.generators()) (g.odd() ? odd : even).push_back(g);
  auto even_alg = FreeCGA::make(even);
  std::vector<Element> even_comps;
  for (const auto& c : comps) even_comps.push_back(transport(c, even_alg));
  HilbertTable t = general_hilbert(*even_alg, even_comps, max_degree);
  for (const auto& g : odd) {
    HilbertTable ext{std::vector<long long>(max_degree + 1, 0)};
    ext.dims[0] = 1;
    if (g.degree <= max_degree) ext.dims[g.degree] = 1;
    t = series_product(t, ext, max_degree);
  }
  return t;
}

// ---------------------------------------------------------------------------
// SignAction

namespace {

SignAction::Signs compose(const SignAction::Signs& a, const SignAction::Signs& b) {
  SignAction::Signs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

void check_signs(const FreeCGA& alg, const SignAction::Signs& s) {
  if (s.size() != alg.size()) throw std::invalid_argument("sign vector has wrong length");
  for (int v : s)
    if (v != 1 && v != -1) throw std::invalid_argument("sign entries must be +1 or -1");
}

}  // namespace

SignAction SignAction::generated_by(AlgebraPtr algebra, const std::vector<Signs>& generators) {
  std::vector<Signs> elements{Signs(algebra->size(), 1)};
  std::set<Signs> seen(elements.begin(), elements.end());
  for (const auto& g : generators) check_signs(*algebra, g);
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) {
      Signs next = compose(elements[i], g);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  return SignAction(std::move(algebra), std::move(elements));
}

SignAction SignAction::trivial(AlgebraPtr algebra) { return generated_by(std::move(algebra), {}); }

SignAction SignAction::from_elements(AlgebraPtr algebra, std::vector<Signs> elements) {
  std::set<Signs> set;
  for (const auto& s : elements) {
    check_signs(*algebra, s);
    if (!set.insert(s).second) throw std::invalid_argument("repeated group element");
  }
  if (!set.count(Signs(algebra->size(), 1))) throw std::invalid_argument("identity missing");
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!set.count(compose(a, b))) throw std::invalid_argument("sign action not closed");
  return SignAction(std::move(algebra), std::move(elements));
}

int SignAction::sign(std::size_t element, const Monomial& m) const {
  const Signs& s = elements_.at(element);
  int out = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0 && m.exponents[i] % 2 != 0) out = -out;
  return out;
}

bool SignAction::fixes(const Monomial& m) const {
  for (std::size_t g = 0; g < elements_.size(); ++g)
    if (sign(g, m) < 0) return false;
  return true;
}

Element SignAction::apply(std::size_t element, const Element& x) const {
  Element out(x.algebra());
  for (const auto& [m, c] : x.terms()) out.add_term(m, sign(element, m) > 0 ? c : Rational(-c));
  return out;
}

Element SignAction::average(const Element& x) const {
  Element out(x.algebra());
  for (std::size_t g = 0; g < elements_.size(); ++g) out += apply(g, x);
  out *= Rational(1, static_cast<unsigned long>(elements_.size()));
  return out;
}

SignAction SignAction::extend_to(const AlgebraPtr& target) const {
  std::vector<Signs> elements;
  for (const auto& s : elements_) {
    Signs t(target->size(), 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& g = algebra_->generator(i);
      if (auto j = target->find(g.name)) t[*j] = s[i];
    }
    elements.push_back(std::move(t));
  }
  return generated_by(target, elements);
}

namespace {

// Per-monomial value of (1/|G|) sum_g sign_g(m) on one slice.
std::vector<Rational> averaging_factors(const SignAction& action, const DegreeSlice& slice) {
  std::vector<Rational> f(slice.size());
  const Rational inv(1, static_cast<unsigned long>(action.order()));
  for (std::size_t j = 0; j < slice.size(); ++j) {
    long total = 0;
    for (std::size_t g = 0; g < action.order(); ++g) total += action.sign(g, slice.basis[j]);
    f[j] = Rational(total) * inv;
  }
  return f;
}

void require_same_algebra(const QuotientPresentation& p, const SignAction& action) {
  if (p.algebra != action.algebra() && !p.algebra->same_as(*action.algebra()))
    throw std::invalid_argument("sign action is defined on a different algebra");
}

void check_descends(const QuotientPresentation& p, const SignAction& action,
                    const std::vector<Element>& comps) {
  std::map<int, Echelon> ideals;
  for (const auto& comp : comps) {
    const int d = *comp.degree();
    auto it = ideals.find(d);
    if (it == ideals.end()) it = ideals.emplace(d, ideal_slice(*p.algebra, comps, d)).first;
    const auto& slice = p.algebra->slice(d);
    for (std::size_t g = 0; g < action.order(); ++g)
      if (!it->second.contains(coordinates(action.apply(g, comp), slice)))
        throw std::invalid_argument("action does not descend");
  }
}

}  // namespace

HilbertTable invariant_hilbert_function(const QuotientPresentation& p, const SignAction& action,
                                        int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  require_same_algebra(p, action);
  const auto comps = p.relation_components();
  check_descends(p, action, comps);

  const FreeCGA& alg = *p.algebra;
  HilbertTable t{std::vector<long long>(max_degree + 1, 0)};
  for (int d = 0; d <= max_degree; ++d) {
    const auto& slice = alg.slice(d);
    const auto factors = averaging_factors(action, slice);
    long long fixed = 0;
    for (const auto& f : factors)
      if (f != 0) ++fixed;
    // Invariants of V/I are V^G / R(I) where R is the group average.
    Echelon averaged(slice.size());
    for_each_ideal_vector(alg, comps, d, [&](SparseVector v) {
      SparseVector r;
      for (auto& e : v)
        if (factors[e.column] != 0) r.push_back({e.column, e.value * factors[e.column]});
      if (!r.empty()) averaged.insert(std::move(r));
    });
    t.dims[d] = fixed - static_cast<long long>(averaged.rank());
  }
  return t;
}

DenseMatrix averaging_operator(const QuotientPresentation& p, const SignAction& action, int degree) {
  require_same_algebra(p, action);
  const auto comps = p.relation_components();
  check_descends(p, action, comps);
  const FreeCGA& alg = *p.algebra;
  const auto& slice = alg.slice(degree);
  const Echelon ideal = ideal_slice(alg, comps, degree);

  std::vector<std::size_t> standard;
  std::vector<std::size_t> position(slice.size(), 0);
  for (std::size_t c = 0; c < slice.size(); ++c)
    if (!ideal.is_pivot(c)) {
      position[c] = standard.size();
      standard.push_back(c);
    }

  const std::size_t n = standard.size();
  DenseMatrix avg(n, std::vector<Rational>(n, Rational(0)));
  const Rational inv(1, static_cast<unsigned long>(action.order()));
  for (std::size_t g = 0; g < action.order(); ++g)
    for (std::size_t j = 0; j < n; ++j) {
      const Element image = action.apply(g, Element::monomial(p.algebra, slice.basis[standard[j]]));
      for (const auto& e : ideal.normal_form(coordinates(image, slice)))
        avg[position[e.column]][j] += e.value * inv;
    }
  return avg;
}

// ---------------------------------------------------------------------------
// Pushout

QuotientPresentation pushout(const QuotientPresentation& left, const QuotientPresentation& right,
                             const std::vector<std::pair<Element, Element>>& base_pairs,
                             std::string label) {
  std::vector<GeneratorDecl> gens = left.algebra->generators();
  for (const auto& g : right.algebra->generators()) {
    if (left.algebra->find(g.name))
      throw std::invalid_argument("pushout: generator name clash '" + g.name + "'");
    gens.push_back(g);
  }
  auto alg = FreeCGA::make(std::move(gens));

  QuotientPresentation out{alg, {}, label.empty() ? left.label + " (x) " + right.label : label};
  for (const auto& r : left.relations) out.relations.push_back(transport(r, alg));
  for (const auto& r : right.relations) out.relations.push_back(transport(r, alg));
  for (const auto& [x, y] : base_pairs) {
    if (!x.is_homogeneous() || !y.is_homogeneous())
      throw std::invalid_argument("pushout: paired elements must be homogeneous");
    if (!x.is_zero() && !y.is_zero() && *x.degree() != *y.degree())
      throw std::invalid_argument("pushout: degree mismatch in a pair (" + x.to_string() + ", " +
                                  y.to_string() + ")");
    Element rel = transport(x, alg) - transport(y, alg);
    if (!rel.is_zero()) out.relations.push_back(std::move(rel));
  }
  return out;
}

}  // namespace eqc
