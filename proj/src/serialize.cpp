#include "eqc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace eqc {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(where + ": integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<GeneratorDecl> generators_from_json(const Json& j) {
  const Json& list = field(j, "generators", "document");
  if (!list.is_array()) throw ParseError("generators: expected an array");
  std::vector<GeneratorDecl> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    out.push_back({as_string(field(list[i], "name", where), where + ".name"),
                   as_int(field(list[i], "degree", where), where + ".degree")});
  }
  return out;
}

Json generators_to_json(const std::vector<GeneratorDecl>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back({{"name", g.name}, {"degree", g.degree}});
  return out;
}

std::string label_from_json(const Json& j) {
  auto it = j.find("label");
  if (it == j.end()) return {};
  return as_string(*it, "label");
}

AlgebraPtr make_algebra(std::vector<GeneratorDecl> gens) {
  try {
    return FreeCGA::make(std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("generators: ") + e.what());
  }
}

}  // namespace

Json element_to_json(const Element& x) {
  const FreeCGA& alg = *x.algebra();
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < alg.size(); ++i)
      if (m.exponents[i] != 0) exps[alg.generator(i).name] = m.exponents[i];
    out.push_back({{"coeff", to_string(c)}, {"exponents", exps}});
  }
  return out;
}

Element element_from_json(const Json& j, const AlgebraPtr& algebra) {
  if (!j.is_array()) throw ParseError("element: expected an array of terms");
  Element out(algebra);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string where = "term " + std::to_string(t);
    Rational c;
    try {
      c = parse_rational(as_string(field(j[t], "coeff", where), where + ".coeff"));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ".coeff: " + e.what());
    }
    const Json& exps = field(j[t], "exponents", where);
    if (!exps.is_object()) throw ParseError(where + ".exponents: expected an object");
    Monomial m{std::vector<int>(algebra->size(), 0)};
    for (const auto& [name, value] : exps.items()) {
      auto i = algebra->find(name);
      if (!i) throw ParseError(where + ": unknown generator '" + name + "'");
      const int e = as_int(value, where + ".exponents." + name);
      if (e < 0) throw ParseError(where + ": negative exponent for '" + name + "'");
      if (e > 1 && algebra->is_odd(*i)) {
        // Odd generators square to zero.
        m.exponents.clear();
        break;
      }
      m.exponents[*i] = e;
    }
    if (!m.exponents.empty()) out.add_term(m, c);
  }
  return out;
}

Json presentation_to_json(const QuotientPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(element_to_json(r));
  return {{"label", p.label}, {"generators", generators_to_json(p.algebra->generators())}, {"relations", rels}};
}

QuotientPresentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  AlgebraPtr alg = make_algebra(generators_from_json(j));
  QuotientPresentation out{alg, {}, label_from_json(j)};
  auto it = j.find("relations");
  if (it != j.end()) {
    if (!it->is_array()) throw ParseError("relations: expected an array");
    for (const auto& r : *it) out.relations.push_back(element_from_json(r, alg));
  }
  return out;
}

Json model_to_json(const SullivanModel& m) {
  Json d = Json::object();
  for (const auto& g : m.fiber()) {
    auto it = m.differential().find(g.name);
    if (it != m.differential().end()) d[g.name] = element_to_json(it->second);
  }
  return {{"label", m.label()},
          {"generators", generators_to_json(m.algebra()->generators())},
          {"differential", d}};
}

SullivanModel model_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document: expected an object");
  const std::vector<GeneratorDecl> gens = generators_from_json(j);
  std::vector<GeneratorDecl> even, odd;
  for (const auto& g : gens) (g.odd() ? odd : even).push_back(g);
  // Differentials are read over all generators so that validate() can name
  // a non-base generator instead of failing here.
  AlgebraPtr all = make_algebra(gens);
  std::map<std::string, Element> d;
  const Json& dj = field(j, "differential", "document");
  if (!dj.is_object()) throw ParseError("differential: expected an object");
  for (const auto& [name, value] : dj.items()) d.emplace(name, element_from_json(value, all));
  return SullivanModel(make_algebra(even), odd, std::move(d), label_from_json(j));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace eqc
