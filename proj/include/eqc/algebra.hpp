#pragma once

#include "eqc/linalg.hpp"
#include "eqc/rational.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eqc {

// A named generator of cohomological degree >= 1. Odd degree means exterior.
struct GeneratorDecl {
  std::string name;
  int degree = 1;

  bool odd() const { return degree % 2 != 0; }
  bool operator==(const GeneratorDecl&) const = default;
};

// Exponent vector indexed by the owning algebra's generator order.
struct Monomial {
  std::vector<int> exponents;

  bool operator==(const Monomial&) const = default;
};

// Canonical order: lexicographic on exponent vectors with higher powers of
// earlier generators first, e.g. e^2 < e*e' < e'^2 and 1 is last.
bool operator<(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// All monomials of one degree, in canonical order, with a reverse index.
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> basis;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;

  std::optional<std::size_t> find(const Monomial& m) const;
  std::size_t size() const { return basis.size(); }
};

class FreeCGA;
using AlgebraPtr = std::shared_ptr<const FreeCGA>;

// Free graded-commutative algebra: exterior on the odd generators tensor
// polynomial on the even ones. Immutable once built; degree slices are
// enumerated lazily and cached (thread-safe).
class FreeCGA {
 public:
  static AlgebraPtr make(std::vector<GeneratorDecl> generators);

  const std::vector<GeneratorDecl>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const GeneratorDecl& generator(std::size_t i) const { return gens_.at(i); }
  bool is_odd(std::size_t i) const { return gens_.at(i).odd(); }
  bool has_odd_generators() const;

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  Monomial unit() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
  Monomial generator_monomial(std::size_t i) const;
  int degree(const Monomial& m) const;
  int odd_length(const Monomial& m) const;
  bool is_valid(const Monomial& m) const;

  bool same_as(const FreeCGA& other) const { return gens_ == other.gens_; }

  const DegreeSlice& slice(int degree) const;

  // Readable form such as "e^2*z3".
  std::string format(const Monomial& m) const;

 private:
  explicit FreeCGA(std::vector<GeneratorDecl> generators);

  std::vector<GeneratorDecl> gens_;
  std::unordered_map<std::string, std::size_t> by_name_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<const DegreeSlice>> cache_;
};

std::vector<Monomial> monomial_basis(const FreeCGA& algebra, int degree);

struct SignedMonomial {
  int sign = 0;  // 0 when the product vanishes
  Monomial monomial;
};

// Product of normalized monomials; the sign is the Koszul sign of sorting the
// odd factors of a*b back into declaration order.
SignedMonomial multiply_monomials(const FreeCGA& algebra, const Monomial& a, const Monomial& b);

// Sparse rational combination of monomials. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Element(AlgebraPtr algebra);

  static Element constant(AlgebraPtr algebra, const Rational& c);
  static Element generator(AlgebraPtr algebra, std::string_view name);
  static Element generator(AlgebraPtr algebra, std::size_t index);
  static Element monomial(AlgebraPtr algebra, Monomial m, const Rational& c = Rational(1));

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  // Zero counts as homogeneous (of every degree).
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  bool operator==(const Element& other) const;

  std::string to_string() const;

 private:
  void check_compatible(const Element& other) const;

  AlgebraPtr algebra_;
  Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Element a, const Rational& c);
Element operator*(const Rational& c, Element a);

// Graded-commutative product. Throws std::invalid_argument on mismatched algebras.
Element multiply(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element power(const Element& a, int exponent);

// Splits by degree; zero components are omitted and the parts sum to x.
std::map<int, Element> homogeneous_components(const Element& x);

// Rank of the span of homogeneous elements of the given degree.
// Throws std::invalid_argument on an element of another degree.
std::size_t slice_rank(const std::vector<Element>& vectors, int degree);

// Coordinates of a homogeneous element in the slice basis of its degree.
SparseVector coordinates(const Element& x, const DegreeSlice& slice);
Element from_coordinates(const AlgebraPtr& algebra, const DegreeSlice& slice, const SparseVector& v);

// Algebra map determined by generator images, applied to x. images[i] is the
// image of generator i of x's algebra and must live in `target`.
Element substitute(const Element& x, const AlgebraPtr& target, const std::vector<Element>& images);

// Re-expresses x in an algebra containing the generators x uses (matched by name and degree).
Element transport(const Element& x, const AlgebraPtr& target);

}  // namespace eqc
