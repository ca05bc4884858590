#include "eqc/lie_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace eqc {

// ---------------------------------------------------------------------------
// Descriptors

namespace {

void require_size(int n, int min, const char* what) {
  if (n < min)
    throw std::invalid_argument(std::string(what) + "(" + std::to_string(n) +
                                ") is not a supported group");
}

}  // namespace

GroupDescriptor GroupDescriptor::SO(int n) {
  require_size(n, 1, "SO");
  return {n % 2 == 0 ? Family::SOEven : Family::SOOdd, n, {}};
}
GroupDescriptor GroupDescriptor::Spin(int n) {
  require_size(n, 1, "Spin");
  return {n % 2 == 0 ? Family::SpinEven : Family::SpinOdd, n, {}};
}
GroupDescriptor GroupDescriptor::U(int n) {
  require_size(n, 1, "U");
  return {Family::U, n, {}};
}
GroupDescriptor GroupDescriptor::SU(int n) {
  require_size(n, 1, "SU");
  return {Family::SU, n, {}};
}
GroupDescriptor GroupDescriptor::Sp(int n) {
  require_size(n, 1, "Sp");
  return {Family::Sp, n, {}};
}
GroupDescriptor GroupDescriptor::Torus(int n) {
  require_size(n, 1, "T");
  return {Family::Torus, n, {}};
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  GroupDescriptor g{Family::Product, 0, {}};
  for (auto& f : factors) {
    if (f.family == Family::Product)
      g.factors.insert(g.factors.end(), f.factors.begin(), f.factors.end());
    else
      g.factors.push_back(std::move(f));
  }
  if (g.factors.empty()) throw std::invalid_argument("empty product group");
  return g;
}

bool GroupDescriptor::is_orthogonal() const {
  return family == Family::SOEven || family == Family::SOOdd || family == Family::SpinEven ||
         family == Family::SpinOdd;
}

int GroupDescriptor::rank() const {
  switch (family) {
    case Family::SOEven:
    case Family::SOOdd:
    case Family::SpinEven:
    case Family::SpinOdd:
      return size / 2;
    case Family::U:
    case Family::Sp:
    case Family::Torus:
      return size;
    case Family::SU:
      return size - 1;
    case Family::Product: {
      int r = 0;
      for (const auto& f : factors) r += f.rank();
      return r;
    }
  }
  return 0;
}

std::string GroupDescriptor::code() const {
  auto wrap = [&](const char* name) { return std::string(name) + "(" + std::to_string(size) + ")"; };
  switch (family) {
    case Family::SOEven:
    case Family::SOOdd:
      return wrap("SO");
    case Family::SpinEven:
    case Family::SpinOdd:
      return wrap("Spin");
    case Family::U:
      return wrap("U");
    case Family::SU:
      return wrap("SU");
    case Family::Sp:
      return wrap("Sp");
    case Family::Torus:
      return wrap("T");
    case Family::Product: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : "x") + f.code();
      return out;
    }
  }
  return {};
}

GroupDescriptor parse_group(std::string_view code) {
  std::vector<GroupDescriptor> factors;
  std::string_view rest = code;
  while (true) {
    const auto open = rest.find('(');
    const auto close = rest.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
      throw std::invalid_argument("malformed group code '" + std::string(code) + "'");
    const std::string name(rest.substr(0, open));
    const std::string arg(rest.substr(open + 1, close - open - 1));
    if (arg.empty() || arg.size() > 6 ||
        !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed group code '" + std::string(code) + "'");
    const int n = std::stoi(arg);
    if (name == "SO")
      factors.push_back(GroupDescriptor::SO(n));
    else if (name == "Spin")
      factors.push_back(GroupDescriptor::Spin(n));
    else if (name == "U")
      factors.push_back(GroupDescriptor::U(n));
    else if (name == "SU")
      factors.push_back(GroupDescriptor::SU(n));
    else if (name == "Sp")
      factors.push_back(GroupDescriptor::Sp(n));
    else if (name == "T")
      factors.push_back(GroupDescriptor::Torus(n));
    else
      throw std::invalid_argument("group family '" + name + "' is not in the catalog");
    rest = rest.substr(close + 1);
    if (rest.empty()) break;
    if (rest.front() != 'x')
      throw std::invalid_argument("malformed group code '" + std::string(code) + "'");
    rest.remove_prefix(1);
  }
  if (factors.size() == 1) return factors.front();
  return GroupDescriptor::product(std::move(factors));
}

// ---------------------------------------------------------------------------
// Classifying data

namespace {

struct Entry {
  GeneratorDecl generator;
  GeneratorDecl primitive;
};

std::vector<Entry> simple_entries(const GroupDescriptor& g) {
  std::vector<Entry> out;
  auto add = [&](std::string name, int degree, std::string prim) {
    out.push_back({{std::move(name), degree}, {std::move(prim), degree - 1}});
  };
  auto z = [](int degree) { return "z" + std::to_string(degree - 1); };
  const int n = g.size;
  switch (g.family) {
    case Family::SOEven:
    case Family::SpinEven:
      for (int j = 1; j < n / 2; ++j) add("p" + std::to_string(j), 4 * j, z(4 * j));
      add("e", n, "eta");
      break;
    case Family::SOOdd:
    case Family::SpinOdd:
      for (int j = 1; j <= n / 2; ++j) add("p" + std::to_string(j), 4 * j, z(4 * j));
      break;
    case Family::U:
      for (int j = 1; j <= n; ++j) add("c" + std::to_string(j), 2 * j, z(2 * j));
      break;
    case Family::SU:
      for (int j = 2; j <= n; ++j) add("c" + std::to_string(j), 2 * j, z(2 * j));
      break;
    case Family::Sp:
      for (int j = 1; j <= n; ++j) add("q" + std::to_string(j), 4 * j, z(4 * j));
      break;
    case Family::Torus:
      for (int j = 1; j <= n; ++j) add("t" + std::to_string(j), 2, "u" + std::to_string(j));
      break;
    case Family::Product:
      throw std::logic_error("simple_entries called on a product");
  }
  return out;
}

std::vector<Entry> entries(const GroupDescriptor& g) {
  if (g.family != Family::Product) return simple_entries(g);
  std::vector<Entry> out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::string primes(i, '\'');
    for (auto e : simple_entries(g.factors[i])) {
      e.generator.name += primes;
      e.primitive.name += primes;
      out.push_back(std::move(e));
    }
  }
  return out;
}

// sigma_0..sigma_n of the given elements.
std::vector<Element> elementary_symmetric(const AlgebraPtr& alg, const std::vector<Element>& xs) {
  std::vector<Element> sigma{Element::constant(alg, Rational(1))};
  for (const auto& x : xs) {
    sigma.emplace_back(alg);
    for (std::size_t j = sigma.size() - 1; j >= 1; --j) sigma[j] += sigma[j - 1] * x;
  }
  return sigma;
}

}  // namespace

std::vector<GeneratorDecl> classifying_generators(const GroupDescriptor& g) {
  std::vector<GeneratorDecl> out;
  for (auto& e : entries(g)) out.push_back(std::move(e.generator));
  return out;
}

AlgebraPtr classifying_ring(const GroupDescriptor& g) { return FreeCGA::make(classifying_generators(g)); }

std::vector<GeneratorDecl> primitive_generators(const GroupDescriptor& g) {
  std::vector<GeneratorDecl> out;
  for (auto& e : entries(g)) out.push_back(std::move(e.primitive));
  return out;
}

std::vector<int> primitive_degrees(const GroupDescriptor& g) {
  std::vector<int> out;
  for (const auto& p : primitive_generators(g)) out.push_back(p.degree);
  return out;
}

// ---------------------------------------------------------------------------
// Restriction maps

Element RestrictionMap::operator()(const Element& x) const {
  if (x.algebra() != source_ring && !x.algebra()->same_as(*source_ring))
    throw std::invalid_argument("restriction applied to an element outside H_" + source.code());
  return substitute(x, target_ring, images);
}

Element RestrictionMap::image_of(std::string_view generator) const {
  return images.at(source_ring->index_of(generator));
}

RestrictionMap compose(const RestrictionMap& first, const RestrictionMap& second) {
  if (!first.target_ring->same_as(*second.source_ring))
    throw std::invalid_argument("compose: restriction maps do not chain");
  RestrictionMap out{first.source, second.target, first.source_ring, second.target_ring, {}};
  for (const auto& img : first.images) out.images.push_back(second(transport(img, second.source_ring)));
  return out;
}

namespace {

// Torus images of one simple factor whose coordinates are t[offset..offset+rank).
std::vector<Element> simple_torus_images(const GroupDescriptor& g, const AlgebraPtr& torus,
                                         std::size_t offset) {
  const int r = g.rank();
  std::vector<Element> t;
  for (int i = 0; i < r; ++i) t.push_back(Element::generator(torus, offset + i));
  std::vector<Element> squares;
  for (const auto& x : t) squares.push_back(x * x);

  std::vector<Element> out;
  switch (g.family) {
    case Family::SOEven:
    case Family::SpinEven: {
      auto sigma = elementary_symmetric(torus, squares);
      for (int j = 1; j < r; ++j) out.push_back(sigma[j]);
      Element euler = Element::constant(torus, Rational(1));
      for (const auto& x : t) euler = euler * x;
      out.push_back(euler);
      break;
    }
    case Family::SOOdd:
    case Family::SpinOdd:
    case Family::Sp: {
      auto sigma = elementary_symmetric(torus, squares);
      for (int j = 1; j <= r; ++j) out.push_back(sigma[j]);
      break;
    }
    case Family::U: {
      auto sigma = elementary_symmetric(torus, t);
      for (int j = 1; j <= r; ++j) out.push_back(sigma[j]);
      break;
    }
    case Family::SU: {
      // Torus of SU(n): diagonal entries t_1..t_{n-1}, -(t_1+...+t_{n-1}).
      std::vector<Element> roots = t;
      Element last(torus);
      for (const auto& x : t) last -= x;
      roots.push_back(last);
      auto sigma = elementary_symmetric(torus, roots);
      for (int j = 2; j <= g.size; ++j) out.push_back(sigma[j]);
      break;
    }
    case Family::Torus:
      out = t;
      break;
    case Family::Product:
      throw std::logic_error("simple_torus_images called on a product");
  }
  return out;
}

std::vector<GeneratorDecl> torus_generators(int rank) {
  std::vector<GeneratorDecl> out;
  for (int i = 1; i <= rank; ++i) out.push_back({"t" + std::to_string(i), 2});
  return out;
}

}  // namespace

RestrictionMap torus_restriction(const GroupDescriptor& g) {
  const int r = g.rank();
  auto torus = FreeCGA::make(torus_generators(r));
  RestrictionMap out{g, r > 0 ? GroupDescriptor::Torus(r) : GroupDescriptor{Family::Torus, 0, {}},
                     classifying_ring(g), torus, {}};
  if (g.family != Family::Product) {
    out.images = simple_torus_images(g, torus, 0);
    return out;
  }
  std::size_t offset = 0;
  for (const auto& f : g.factors) {
    auto imgs = simple_torus_images(f, torus, offset);
    out.images.insert(out.images.end(), imgs.begin(), imgs.end());
    offset += f.rank();
  }
  return out;
}

namespace {

// Homogeneous components 0..top of the total class of one factor.
std::vector<Element> total_class(const GroupDescriptor& f, const AlgebraPtr& ring,
                                 const std::string& primes) {
  std::vector<Element> comps{Element::constant(ring, Rational(1))};
  auto gen = [&](const std::string& name) { return Element::generator(ring, name + primes); };
  switch (f.family) {
    case Family::SOEven:
    case Family::SpinEven:
      for (int i = 1; i < f.size / 2; ++i) comps.push_back(gen("p" + std::to_string(i)));
      comps.push_back(gen("e") * gen("e"));
      break;
    case Family::SOOdd:
    case Family::SpinOdd:
      for (int i = 1; i <= f.size / 2; ++i) comps.push_back(gen("p" + std::to_string(i)));
      break;
    case Family::U:
      for (int i = 1; i <= f.size; ++i) comps.push_back(gen("c" + std::to_string(i)));
      break;
    case Family::Sp:
      for (int i = 1; i <= f.size; ++i) comps.push_back(gen("q" + std::to_string(i)));
      break;
    default:
      throw std::invalid_argument("no total class for " + f.code());
  }
  return comps;
}

bool same_block_family(const GroupDescriptor& G, const GroupDescriptor& f) {
  if (G.is_orthogonal()) return f.is_orthogonal();
  return (G.family == Family::U || G.family == Family::Sp) && f.family == G.family;
}

}  // namespace

RestrictionMap block_restriction(const GroupDescriptor& G, const GroupDescriptor& K) {
  const bool block = K.family == Family::Product && K.factors.size() == 2 &&
                     (G.is_orthogonal() || G.family == Family::U || G.family == Family::Sp) &&
                     same_block_family(G, K.factors[0]) && same_block_family(G, K.factors[1]) &&
                     K.factors[0].size + K.factors[1].size == G.size;
  if (!block)
    throw std::invalid_argument(K.code() + " is not a block subgroup of " + G.code());

  auto source = classifying_ring(G);
  auto target = classifying_ring(K);
  const auto left = total_class(K.factors[0], target, "");
  const auto right = total_class(K.factors[1], target, "'");
  auto component = [&](int j) {
    Element c(target);
    for (int i = 0; i <= j; ++i)
      if (i < static_cast<int>(left.size()) && j - i < static_cast<int>(right.size()))
        c += left[i] * right[j - i];
    return c;
  };

  RestrictionMap out{G, K, source, target, {}};
  for (const auto& g : source->generators()) {
    if (g.name == "e") {
      if (K.factors[0].has_euler_class() && K.factors[1].has_euler_class())
        out.images.push_back(Element::generator(target, "e") * Element::generator(target, "e'"));
      else
        out.images.emplace_back(target);  // the torus of K is too small
      continue;
    }
    out.images.push_back(component(std::stoi(g.name.substr(1))));
  }
  return out;
}

Element express_in_invariants(const Element& x, const GroupDescriptor& g) {
  const RestrictionMap tr = torus_restriction(g);
  if (x.algebra() != tr.target_ring && !x.algebra()->same_as(*tr.target_ring))
    throw std::invalid_argument("express_in_invariants: element is not over the torus of " + g.code());
  if (!x.is_homogeneous()) throw std::invalid_argument("express_in_invariants: x must be homogeneous");
  if (x.is_zero()) return Element(tr.source_ring);

  const int d = *x.degree();
  const auto& src = tr.source_ring->slice(d);
  const auto& tgt = x.algebra()->slice(d);
  TrackedEchelon ech(tgt.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    ech.insert(coordinates(transport(tr(Element::monomial(tr.source_ring, src.basis[i])), x.algebra()), tgt), i);
  auto solution = ech.solve(coordinates(x, tgt));
  if (!solution) throw std::invalid_argument("not Weyl-invariant / not expressible");
  return from_coordinates(tr.source_ring, src, *solution);
}

SignAction determinant_involution(const GroupDescriptor& g, std::size_t factor) {
  auto ring = classifying_ring(g);
  SignAction::Signs signs(ring->size(), 1);
  if (g.family == Family::Product) {
    if (factor >= g.factors.size())
      throw std::invalid_argument("factor index out of range for " + g.code());
    if (!g.factors[factor].has_euler_class())
      throw std::invalid_argument(g.factors[factor].code() + " has no orientation class to reverse");
    signs[ring->index_of("e" + std::string(factor, '\''))] = -1;
  } else {
    if (!g.has_euler_class() || factor != 0)
      throw std::invalid_argument(g.code() + " has no orientation class to reverse");
    signs[ring->index_of("e")] = -1;
  }
  return SignAction::generated_by(ring, {signs});
}

SullivanModel universal_koszul_model(const GroupDescriptor& g) {
  auto base = classifying_ring(g);
  const auto prims = primitive_generators(g);
  std::map<std::string, Element> d;
  for (std::size_t i = 0; i < prims.size(); ++i) d.emplace(prims[i].name, Element::generator(base, i));
  return SullivanModel(base, prims, std::move(d), "E" + g.code());
}

}  // namespace eqc
