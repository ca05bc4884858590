#include "eqc/sullivan.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

namespace {

std::vector<GeneratorDecl> concat(const std::vector<GeneratorDecl>& a,
                                  const std::vector<GeneratorDecl>& b) {
  std::vector<GeneratorDecl> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SullivanModel::SullivanModel(AlgebraPtr base, std::vector<GeneratorDecl> fiber,
                             std::map<std::string, Element> differential, std::string label)
    : base_(std::move(base)),
      fiber_(std::move(fiber)),
      differential_(std::move(differential)),
      label_(std::move(label)),
      algebra_(FreeCGA::make(concat(base_->generators(), fiber_))) {}

std::optional<std::string> validate(const SullivanModel& model) {
  for (const auto& g : model.base()->generators())
    if (g.odd())
      return "base generator '" + g.name + "' has odd degree " + std::to_string(g.degree);
  for (const auto& g : model.fiber())
    if (!g.odd())
      return "fiber generator '" + g.name + "' has even degree " + std::to_string(g.degree);

  for (const auto& [name, dz] : model.differential()) {
    auto it = std::find_if(model.fiber().begin(), model.fiber().end(),
                           [&](const GeneratorDecl& g) { return g.name == name; });
    if (it == model.fiber().end())
      return "differential assigned to '" + name + "', which is not a fiber generator";
    const FreeCGA& src = *dz.algebra();
    for (const auto& [m, c] : dz.terms())
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        const auto& g = src.generator(i);
        auto j = model.base()->find(g.name);
        if (!j || model.base()->generator(*j).degree != g.degree)
          return "d(" + name + ") involves '" + g.name + "', which is not a base generator";
      }
    if (!dz.is_homogeneous())
      return "d(" + name + ") = " + dz.to_string() + " is not homogeneous";
    if (!dz.is_zero() && *dz.degree() != it->degree + 1)
      return "d(" + name + ") has degree " + std::to_string(*dz.degree()) + " but must have degree " +
             std::to_string(it->degree + 1);
  }
  return std::nullopt;
}

namespace {

void require_valid(const SullivanModel& model) {
  if (auto err = validate(model)) throw std::invalid_argument("invalid Sullivan model: " + *err);
}

// dz for every generator of model.algebra(), over model.algebra(); zero on the base.
std::vector<Element> compile_differential(const SullivanModel& model) {
  const AlgebraPtr& alg = model.algebra();
  std::vector<Element> d(alg->size(), Element(alg));
  for (const auto& [name, dz] : model.differential()) d[alg->index_of(name)] = transport(dz, alg);
  return d;
}

// Terms of d(m) as (monomial, coefficient) pairs; the monomials are distinct.
template <typename Emit>
void differentiate_monomial(const FreeCGA& alg, const std::vector<Element>& d, const Monomial& m,
                            Emit&& emit) {
  int odd_seen = 0;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!alg.is_odd(i) || m.exponents[i] == 0) continue;
    const bool negative = odd_seen % 2 != 0;
    ++odd_seen;
    Monomial rest = m;
    rest.exponents[i] = 0;
    for (const auto& [em, c] : d[i].terms()) {
      Monomial out = rest;
      for (std::size_t k = 0; k < alg.size(); ++k) out.exponents[k] += em.exponents[k];
      emit(out, negative ? Rational(-c) : c);
    }
  }
}

SparseVector differentiate_to_coordinates(const FreeCGA& alg, const std::vector<Element>& d,
                                          const Monomial& m, const DegreeSlice& target) {
  SparseVector v;
  differentiate_monomial(alg, d, m, [&](const Monomial& out, const Rational& c) {
    v.push_back({target.index.at(out), c});
  });
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.column < b.column;
  });
  return v;
}

}  // namespace

Element apply_d(const SullivanModel& model, const Element& x) {
  require_valid(model);
  const AlgebraPtr& alg = model.algebra();
  if (x.algebra() != alg && !x.algebra()->same_as(*alg))
    throw std::invalid_argument("apply_d: element is not in the model's algebra");
  const auto d = compile_differential(model);
  Element out(alg);
  for (const auto& [m, c] : x.terms())
    differentiate_monomial(*alg, d, m, [&](const Monomial& mo, const Rational& v) {
      out.add_term(mo, c * v);
    });
  return out;
}

SignAction lift_to_model(const SullivanModel& model, const SignAction& base_action) {
  require_valid(model);
  SignAction lifted = base_action.extend_to(model.algebra());
  const auto d = compile_differential(model);
  const FreeCGA& alg = *model.algebra();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    if (!alg.is_odd(i)) continue;
    for (std::size_t g = 0; g < lifted.order(); ++g) {
      const int zsign = lifted.sign(g, alg.generator_monomial(i));
      if (!(lifted.apply(g, d[i]) == d[i] * Rational(zsign)))
        throw std::invalid_argument("sign action does not commute with d on '" +
                                    alg.generator(i).name + "'");
    }
  }
  return lifted;
}

namespace {

// Source monomials of one degree split by exterior length, restricted to the
// invariant ones when an action is given.
std::vector<std::vector<std::size_t>> blocks_by_odd_length(const FreeCGA& alg,
                                                           const DegreeSlice& slice,
                                                           const std::optional<SignAction>& action) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const Monomial& m = slice.basis[j];
    if (action && !action->fixes(m)) continue;
    const auto len = static_cast<std::size_t>(alg.odd_length(m));
    if (blocks.size() <= len) blocks.resize(len + 1);
    blocks[len].push_back(j);
  }
  return blocks;
}

}  // namespace

CohomologyReport cohomology(const SullivanModel& model, int max_degree,
                            const CohomologyOptions& options) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
  require_valid(model);
  const AlgebraPtr& alg = model.algebra();
  const auto d = compile_differential(model);
  if (options.invariants) {
    if (options.invariants->algebra() != alg && !options.invariants->algebra()->same_as(*alg))
      throw std::invalid_argument("invariant action must act on the model's algebra");
    const FreeCGA& a = *alg;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a.is_odd(i)) continue;
      for (std::size_t g = 0; g < options.invariants->order(); ++g) {
        const int zsign = options.invariants->sign(g, a.generator_monomial(i));
        if (!(options.invariants->apply(g, d[i]) == d[i] * Rational(zsign)))
          throw std::invalid_argument("sign action does not commute with d");
      }
    }
  }

  CohomologyReport report;
  report.slice_dims.assign(max_degree + 2, 0);
  report.d_ranks.assign(max_degree + 1, 0);
  report.table.dims.assign(max_degree + 1, 0);
  if (options.representatives) report.representatives.resize(max_degree + 1);

  // Boundaries landing in the current degree, kept only when representatives are wanted.
  std::optional<Echelon> boundaries;

  for (int deg = 0; deg <= max_degree + 1; ++deg) {
    const auto& src = alg->slice(deg);
    const auto blocks = blocks_by_odd_length(*alg, src, options.invariants);
    long long dim = 0;
    for (const auto& b : blocks) dim += static_cast<long long>(b.size());
    report.slice_dims[deg] = dim;
    if (deg > max_degree) break;

    const auto& tgt = alg->slice(deg + 1);
    Echelon next_boundaries(options.representatives ? tgt.size() : 0);
    std::vector<SparseVector> kernel;  // in src coordinates
    long long rank = 0;

    for (std::size_t len = 0; len < blocks.size(); ++len) {
      const auto& block = blocks[len];
      if (len == 0) {
        // d vanishes on the base.
        if (options.representatives)
          for (std::size_t j : block) kernel.push_back({{j, Rational(1)}});
        continue;
      }
      TrackedEchelon ech(tgt.size());
      for (std::size_t pos = 0; pos < block.size(); ++pos) {
        SparseVector image = differentiate_to_coordinates(*alg, d, src.basis[block[pos]], tgt);
        if (options.representatives) next_boundaries.insert(image);
        auto dependency = ech.insert(std::move(image), pos);
        if (dependency && options.representatives) {
          SparseVector k;
          for (const auto& e : *dependency) k.push_back({block[e.column], e.value});
          std::sort(k.begin(), k.end(), [](const SparseEntry& a, const SparseEntry& b) {
            return a.column < b.column;
          });
          kernel.push_back(std::move(k));
        }
      }
      rank += static_cast<long long>(ech.rank());
    }
    report.d_ranks[deg] = rank;
    const long long prev_rank = deg > 0 ? report.d_ranks[deg - 1] : 0;
    report.table.dims[deg] = dim - rank - prev_rank;

    if (options.representatives) {
      Echelon classes = boundaries ? std::move(*boundaries) : Echelon(src.size());
      for (auto& k : kernel)
        if (classes.insert(k)) report.representatives[deg].push_back(from_coordinates(alg, src, k));
      if (static_cast<long long>(report.representatives[deg].size()) != report.table.dims[deg])
        throw std::logic_error("representative count disagrees with the Betti number");
      boundaries = std::move(next_boundaries);
    }
  }
  return report;
}

}  // namespace eqc
