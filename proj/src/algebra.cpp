#include "eqc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace eqc {

bool operator<(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.exponents.size(), b.exponents.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
  return a.exponents.size() < b.exponents.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int e : m.exponents) h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<std::size_t> DegreeSlice::find(const Monomial& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// FreeCGA

FreeCGA::FreeCGA(std::vector<GeneratorDecl> generators) : gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (g.degree < 1)
      throw std::invalid_argument("generator '" + g.name + "' has degree " +
                                  std::to_string(g.degree) + " < 1");
    if (!by_name_.emplace(g.name, i).second)
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
}

AlgebraPtr FreeCGA::make(std::vector<GeneratorDecl> generators) {
  return AlgebraPtr(new FreeCGA(std::move(generators)));
}

bool FreeCGA::has_odd_generators() const {
  for (const auto& g : gens_)
    if (g.odd()) return true;
  return false;
}

std::optional<std::size_t> FreeCGA::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t FreeCGA::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Monomial FreeCGA::generator_monomial(std::size_t i) const {
  Monomial m = unit();
  m.exponents.at(i) = 1;
  return m;
}

int FreeCGA::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m.exponents[i] * gens_[i].degree;
  return d;
}

int FreeCGA::odd_length(const Monomial& m) const {
  int n = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].odd()) n += m.exponents[i];
  return n;
}

bool FreeCGA::is_valid(const Monomial& m) const {
  if (m.exponents.size() != gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (m.exponents[i] < 0) return false;
    if (gens_[i].odd() && m.exponents[i] > 1) return false;
  }
  return true;
}

const DegreeSlice& FreeCGA::slice(int degree) const {
  std::lock_guard lock(cache_mutex_);
  auto& entry = cache_[degree];
  if (!entry) {
    auto s = std::make_unique<DegreeSlice>();
    s->degree = degree;
    s->basis = monomial_basis(*this, degree);
    s->index.reserve(s->basis.size());
    for (std::size_t i = 0; i < s->basis.size(); ++i) s->index.emplace(s->basis[i], i);
    entry = std::move(s);
  }
  return *entry;
}

std::string FreeCGA::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens_[i].name;
    if (m.exponents[i] > 1) out += '^' + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomial_basis(const FreeCGA& algebra, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial current = algebra.unit();
  const std::size_t n = algebra.size();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int d = algebra.generator(i).degree;
    int top = remaining / d;
    if (algebra.is_odd(i)) top = std::min(top, 1);
    for (int e = top; e >= 0; --e) {
      current.exponents[i] = e;
      rec(i + 1, remaining - e * d);
    }
    current.exponents[i] = 0;
  };
  rec(0, degree);
  return out;
}

SignedMonomial multiply_monomials(const FreeCGA& algebra, const Monomial& a, const Monomial& b) {
  SignedMonomial out{1, algebra.unit()};
  int odd_in_a_after = 0;  // odd factors of a with index greater than the current one
  for (std::size_t i = 0; i < algebra.size(); ++i)
    if (algebra.is_odd(i)) odd_in_a_after += a.exponents[i];
  int inversions = 0;
  for (std::size_t i = 0; i < algebra.size(); ++i) {
    const int ea = a.exponents[i];
    const int eb = b.exponents[i];
    if (algebra.is_odd(i)) {
      odd_in_a_after -= ea;
      if (ea + eb > 1) return {0, algebra.unit()};
      // b's odd factor i must move past a's odd factors with larger index.
      if (eb == 1) inversions += odd_in_a_after;
    }
    out.monomial.exponents[i] = ea + eb;
  }
  if (inversions % 2 != 0) out.sign = -1;
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("element without an algebra");
}

Element Element::constant(AlgebraPtr algebra, const Rational& c) {
  Element x(std::move(algebra));
  x.add_term(x.algebra_->unit(), c);
  return x;
}

Element Element::generator(AlgebraPtr algebra, std::string_view name) {
  const std::size_t i = algebra->index_of(name);
  return generator(std::move(algebra), i);
}

Element Element::generator(AlgebraPtr algebra, std::size_t index) {
  Monomial m = algebra->generator_monomial(index);
  return monomial(std::move(algebra), std::move(m));
}

Element Element::monomial(AlgebraPtr algebra, Monomial m, const Rational& c) {
  if (!algebra->is_valid(m)) throw std::invalid_argument("monomial does not fit the algebra");
  Element x(std::move(algebra));
  x.add_term(m, c);
  return x;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = algebra_->degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (algebra_->degree(m) != d) return false;
  return true;
}

std::optional<int> Element::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return algebra_->degree(terms_.begin()->first);
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& other) const {
  if (algebra_ != other.algebra_ && !algebra_->same_as(*other.algebra_))
    throw std::invalid_argument("elements belong to different algebras");
}

Element& Element::operator+=(const Element& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element x = *this;
  x *= Rational(-1);
  return x;
}

bool Element::operator==(const Element& other) const {
  if (algebra_ != other.algebra_ && !algebra_->same_as(*other.algebra_)) return false;
  return terms_ == other.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool is_unit = m == algebra_->unit();
    if (is_unit) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << algebra_->format(m);
    }
  }
  return out.str();
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, const Rational& c) { return a *= c; }
Element operator*(const Rational& c, Element a) { return a *= c; }

Element multiply(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra() && !a.algebra()->same_as(*b.algebra()))
    throw std::invalid_argument("cannot multiply elements of different algebras");
  const FreeCGA& alg = *a.algebra();
  Element out(a.algebra());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = multiply_monomials(alg, ma, mb);
      if (prod.sign == 0) continue;
      out.add_term(prod.monomial, prod.sign > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    }
  return out;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Element power(const Element& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Element out = Element::constant(a.algebra(), Rational(1));
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

std::map<int, Element> homogeneous_components(const Element& x) {
  std::map<int, Element> out;
  for (const auto& [m, c] : x.terms()) {
    const int d = x.algebra()->degree(m);
    auto it = out.try_emplace(d, x.algebra()).first;
    it->second.add_term(m, c);
  }
  return out;
}

SparseVector coordinates(const Element& x, const DegreeSlice& slice) {
  SparseVector v;
  v.reserve(x.terms().size());
  for (const auto& [m, c] : x.terms()) {
    auto idx = slice.find(m);
    if (!idx)
      throw std::invalid_argument("element term " + x.algebra()->format(m) +
                                  " is not of degree " + std::to_string(slice.degree));
    v.push_back({*idx, c});
  }
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.column < b.column;
  });
  return v;
}

Element from_coordinates(const AlgebraPtr& algebra, const DegreeSlice& slice, const SparseVector& v) {
  Element x(algebra);
  for (const auto& e : v) x.add_term(slice.basis.at(e.column), e.value);
  return x;
}

std::size_t slice_rank(const std::vector<Element>& vectors, int degree) {
  if (vectors.empty()) return 0;
  const auto& slice = vectors.front().algebra()->slice(degree);
  Echelon ech(slice.size());
  for (const auto& v : vectors) {
    if (v.algebra() != vectors.front().algebra() &&
        !v.algebra()->same_as(*vectors.front().algebra()))
      throw std::invalid_argument("slice_rank: elements from different algebras");
    ech.insert(coordinates(v, slice));
  }
  return ech.rank();
}

Element substitute(const Element& x, const AlgebraPtr& target, const std::vector<Element>& images) {
  const FreeCGA& src = *x.algebra();
  if (images.size() != src.size())
    throw std::invalid_argument("substitute: need one image per generator");
  Element out(target);
  for (const auto& [m, c] : x.terms()) {
    Element term = Element::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int e = 0; e < m.exponents[i]; ++e) term = multiply(term, images[i]);
    out += term;
  }
  return out;
}

Element transport(const Element& x, const AlgebraPtr& target) {
  const FreeCGA& src = *x.algebra();
  std::vector<bool> used(src.size(), false);
  for (const auto& [m, c] : x.terms())
    for (std::size_t i = 0; i < src.size(); ++i)
      if (m.exponents[i] != 0) used[i] = true;
  std::vector<Element> images;
  images.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& g = src.generator(i);
    auto j = target->find(g.name);
    if (j && target->generator(*j).degree == g.degree) {
      images.push_back(Element::generator(target, *j));
    } else if (!used[i]) {
      images.push_back(Element(target));
    } else {
      throw std::invalid_argument("transport: target lacks generator '" + g.name + "'");
    }
  }
  // Odd generators may be ordered differently in the target, so go through
  // the multiplicative route rather than copying exponents.
  return substitute(x, target, images);
}

}  // namespace eqc
