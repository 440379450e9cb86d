#include "hnk/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace hnk {

using nlohmann::json;

std::string kind_to_string(AlgebraKind k) {
  switch (k) {
  case AlgebraKind::hom_associative:
    return "hom-associative";
  case AlgebraKind::hom_lie:
    return "hom-lie";
  case AlgebraKind::hom_poisson:
    return "hom-poisson";
  case AlgebraKind::nary_nambu:
    return "nary-nambu";
  case AlgebraKind::nary_nambu_poisson:
    return "nary-nambu-poisson";
  }
  return "hom-lie";
}

AlgebraKind kind_from_string(const std::string &s) {
  if (s == "hom-associative")
    return AlgebraKind::hom_associative;
  if (s == "hom-lie")
    return AlgebraKind::hom_lie;
  if (s == "hom-poisson")
    return AlgebraKind::hom_poisson;
  if (s == "nary-nambu")
    return AlgebraKind::nary_nambu;
  if (s == "nary-nambu-poisson")
    return AlgebraKind::nary_nambu_poisson;
  throw input_error("unknown algebra kind '" + s + "'");
}

namespace {

Scalar scalar_from_json(const json &v) {
  if (v.is_number_integer())
    return Scalar(static_cast<long long>(v.get<long long>()));
  if (v.is_string())
    return parse_scalar(v.get<std::string>());
  throw input_error("scalar literals must be integers or \"p/q\" strings");
}

Vector vector_from_json(const json &v, const SuperSpace &space) {
  if (!v.is_object())
    throw input_error("vector values must be {label: scalar} objects");
  Vector out(space.dim());
  for (const auto &[label, val] : v.items())
    out[space.index_of(label)] = scalar_from_json(val);
  return out;
}

json vector_to_json(const Vector &v, const SuperSpace &space) {
  json out = json::object();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0)
      out[space.label(i)] = scalar_to_string(v[i]);
  return out;
}

LinearMap linear_map_from_json(const json &cols, const SuperSpace &space,
                               const std::string &name) {
  if (!cols.is_object())
    throw input_error("map '" + name + "' must be a {label: column} object");
  Matrix m(space.dim(), space.dim());
  for (const auto &[label, col] : cols.items()) {
    const std::size_t i = space.index_of(label);
    const Vector v = vector_from_json(col, space);
    for (std::size_t r = 0; r < space.dim(); ++r)
      m.at(r, i) = v[r];
  }
  return LinearMap::endo(space, std::move(m));
}

json linear_map_to_json(const LinearMap &f) {
  json out = json::object();
  const SuperSpace &space = f.domain();
  for (std::size_t i = 0; i < space.dim(); ++i)
    out[space.label(i)] = vector_to_json(f.column(i), space);
  return out;
}

struct ParsedProduct {
  MultiLinearMap map;
  std::vector<bool> listed;
};

ParsedProduct product_from_json(const json &entries, const SuperSpace &space,
                                std::size_t arity, const std::string &name) {
  if (!entries.is_array())
    throw input_error("product '" + name + "' must be an entry list");
  MultiLinearMap map(space, arity);
  std::size_t rows = 1;
  for (std::size_t i = 0; i < arity; ++i)
    rows *= space.dim();
  std::vector<bool> listed(rows, false);

  for (const auto &entry : entries) {
    if (!entry.is_object() || !entry.contains("args") ||
        !entry.contains("value"))
      throw input_error("product '" + name +
                        "': each entry needs args and value");
    const auto &args = entry.at("args");
    if (!args.is_array() || args.size() != arity)
      throw input_error("product '" + name + "': expected " +
                        std::to_string(arity) + " arguments per entry");
    std::vector<std::size_t> idx;
    idx.reserve(arity);
    for (const auto &a : args)
      idx.push_back(space.index_of(a.get<std::string>()));
    const std::size_t flat = flat_index(idx, space.dim());
    if (listed[flat])
      throw input_error("product '" + name +
                        "': duplicate entry for the same tuple");
    listed[flat] = true;

    const Vector v = vector_from_json(entry.at("value"), space);
    const Parity want = space.tuple_parity(idx);
    for (std::size_t j = 0; j < space.dim(); ++j)
      if (v[j] != 0 && !(space.parity(j) == want))
        throw input_error("product '" + name +
                          "': parity violation in a product entry (output " +
                          space.label(j) + ")");
    map.set_value(idx, v);
  }
  return {std::move(map), std::move(listed)};
}

json product_to_json(const MultiLinearMap &m) {
  json out = json::array();
  const SuperSpace &space = m.space();
  for_each_tuple(space.dim(), m.arity(), [&](std::span<const std::size_t> t) {
    if (!m.has_nonzero_value(t))
      return true;
    json entry;
    json args = json::array();
    for (auto i : t)
      args.push_back(space.label(i));
    entry["args"] = std::move(args);
    entry["value"] = vector_to_json(m.value_at(t), space);
    out.push_back(std::move(entry));
    return true;
  });
  return out;
}

Cochain cochain_from_json(const json &j, const SuperSpace &space) {
  if (!j.is_object() || !j.contains("arity"))
    throw input_error("cochain: expected {arity, entries}");
  const std::size_t arity = j.at("arity").get<std::size_t>();
  Cochain phi(space, arity);
  if (j.contains("entries")) {
    for (const auto &entry : j.at("entries")) {
      const auto &args = entry.at("args");
      if (!args.is_array() || args.size() != arity)
        throw input_error("cochain: argument count does not match arity");
      std::vector<std::size_t> idx;
      for (const auto &a : args)
        idx.push_back(space.index_of(a.get<std::string>()));
      phi.value_at(idx) = scalar_from_json(entry.at("value"));
    }
  }
  return phi;
}

json cochain_to_json(const Cochain &phi) {
  json out;
  out["arity"] = phi.arity();
  json entries = json::array();
  const SuperSpace &space = phi.space();
  for_each_tuple(space.dim(), phi.arity(),
                 [&](std::span<const std::size_t> t) {
                   if (phi.value_at(t) == 0)
                     return true;
                   json e;
                   json args = json::array();
                   for (auto i : t)
                     args.push_back(space.label(i));
                   e["args"] = std::move(args);
                   e["value"] = scalar_to_string(phi.value_at(t));
                   entries.push_back(std::move(e));
                   return true;
                 });
  out["entries"] = std::move(entries);
  return out;
}

json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw input_error("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &e) {
    throw input_error("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

} // namespace

MultiLinearMap AlgebraFile::product_or_zero(const std::string &name,
                                            std::size_t want_arity) const {
  auto it = products.find(name);
  if (it == products.end())
    return MultiLinearMap::zero(space, want_arity);
  if (it->second.arity() != want_arity)
    throw input_error("product '" + name + "' has arity " +
                      std::to_string(it->second.arity()) + ", expected " +
                      std::to_string(want_arity));
  return it->second;
}

LinearMap AlgebraFile::map_or_identity(const std::string &name) const {
  auto it = maps.find(name);
  if (it == maps.end())
    return LinearMap::identity(space);
  return it->second;
}

const LinearMap &AlgebraFile::named_map(const std::string &name) const {
  auto it = maps.find(name);
  if (it == maps.end())
    throw input_error("file carries no map named '" + name + "'");
  return it->second;
}

HomAssociativeSuperalgebra AlgebraFile::as_hom_associative() const {
  return HomAssociativeSuperalgebra(space, product_or_zero("mu", 2),
                                    map_or_identity("alpha"), commutative);
}

HomLieSuperalgebra AlgebraFile::as_hom_lie() const {
  return HomLieSuperalgebra(space, product_or_zero("bracket", 2),
                            map_or_identity("alpha"));
}

HomPoissonSuperalgebra AlgebraFile::as_hom_poisson() const {
  return HomPoissonSuperalgebra(space, product_or_zero("bracket", 2),
                                product_or_zero("mu", 2),
                                map_or_identity("alpha"), commutative);
}

NaryHomNambuSuperalgebra AlgebraFile::as_nary() const {
  return NaryHomNambuSuperalgebra(space, arity,
                                  product_or_zero("bracket", arity),
                                  map_or_identity("alpha"), multiplicative);
}

NaryHomNambuPoissonSuperalgebra AlgebraFile::as_nary_poisson() const {
  return NaryHomNambuPoissonSuperalgebra(as_nary(), product_or_zero("mu", 2),
                                         commutative);
}

AlgebraFile parse_algebra_json(const json &j, bool force_skew_complete) {
  if (!j.is_object())
    throw input_error("algebra file must be a JSON object");
  AlgebraFile file;
  file.kind = kind_from_string(j.value("kind", std::string("hom-lie")));

  if (!j.contains("basis") || !j.at("basis").is_array() ||
      j.at("basis").empty())
    throw input_error("algebra file needs a non-empty basis");
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (const auto &b : j.at("basis")) {
    labels.push_back(b.at("label").get<std::string>());
    const int p = b.at("parity").get<int>();
    if (p != 0 && p != 1)
      throw input_error("basis parity must be 0 or 1");
    parities.push_back(Parity(p));
  }
  file.space = SuperSpace(std::move(labels), std::move(parities));

  if (j.contains("arity"))
    file.arity = j.at("arity").get<std::size_t>();
  if (file.kind == AlgebraKind::nary_nambu ||
      file.kind == AlgebraKind::nary_nambu_poisson) {
    if (file.arity < 2)
      throw input_error("n-ary kinds need arity >= 2");
  } else {
    file.arity = 2;
  }

  if (j.contains("claims")) {
    const auto &c = j.at("claims");
    file.commutative = c.value("commutative", false);
    file.multiplicative = c.value("multiplicative", false);
    file.skew_complete = c.value("skew-complete", false);
  }
  if (force_skew_complete)
    file.skew_complete = true;

  if (j.contains("products")) {
    for (const auto &[name, entries] : j.at("products").items()) {
      const std::size_t arity =
          (name == "bracket") ? file.bracket_arity() : 2;
      ParsedProduct p = product_from_json(entries, file.space, arity, name);
      if (name == "bracket" && file.skew_complete)
        p.map = skew_complete(p.map, p.listed);
      file.products.emplace(name, std::move(p.map));
    }
  }

  if (j.contains("maps"))
    for (const auto &[name, cols] : j.at("maps").items())
      file.maps.emplace(name,
                        linear_map_from_json(cols, file.space, name));

  if (j.contains("phi"))
    file.phi = cochain_from_json(j.at("phi"), file.space);

  return file;
}

AlgebraFile parse_algebra_file(const std::string &path,
                               bool force_skew_complete) {
  return parse_algebra_json(load_json(path), force_skew_complete);
}

json algebra_to_json(const AlgebraFile &file) {
  json j;
  j["kind"] = kind_to_string(file.kind);
  json basis = json::array();
  for (std::size_t i = 0; i < file.space.dim(); ++i) {
    json b;
    b["label"] = file.space.label(i);
    b["parity"] = file.space.parity(i).value();
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  if (file.kind == AlgebraKind::nary_nambu ||
      file.kind == AlgebraKind::nary_nambu_poisson)
    j["arity"] = file.arity;
  json claims;
  claims["commutative"] = file.commutative;
  claims["multiplicative"] = file.multiplicative;
  claims["skew-complete"] = file.skew_complete;
  j["claims"] = std::move(claims);
  json products = json::object();
  for (const auto &[name, m] : file.products)
    products[name] = product_to_json(m);
  j["products"] = std::move(products);
  json maps = json::object();
  for (const auto &[name, m] : file.maps)
    maps[name] = linear_map_to_json(m);
  j["maps"] = std::move(maps);
  if (file.phi)
    j["phi"] = cochain_to_json(*file.phi);
  return j;
}

std::string canonical_dump(const json &j) { return j.dump(2); }

namespace {

std::uint64_t fnv1a(const std::string &data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace

std::string input_digest(const AlgebraFile &file) {
  const std::uint64_t h = fnv1a(canonical_dump(algebra_to_json(file)));
  char buf[24];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

json report_to_json(const CheckReport &r) {
  json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  if (!r.witness.empty())
    j["witness"] = r.witness;
  if (!r.lhs.empty())
    j["lhs"] = r.lhs;
  if (!r.rhs.empty())
    j["rhs"] = r.rhs;
  if (!r.detail.empty())
    j["detail"] = r.detail;
  if (!r.sub.empty()) {
    json sub = json::array();
    for (const auto &s : r.sub)
      sub.push_back(report_to_json(s));
    j["sub"] = std::move(sub);
  }
  return j;
}

Cochain parse_cochain_file(const std::string &path, const SuperSpace &space) {
  return cochain_from_json(load_json(path), space);
}

LinearMap parse_linear_map_file(const std::string &path,
                                const SuperSpace &space) {
  const json j = load_json(path);
  if (!j.is_object() || !j.contains("map"))
    throw input_error("linear map file must be {\"map\": {label: column}}");
  return linear_map_from_json(j.at("map"), space, "map");
}

namespace {

AlgebraFile base_file(AlgebraKind kind, const SuperSpace &space,
                      const LinearMap &alpha) {
  AlgebraFile f;
  f.kind = kind;
  f.space = space;
  if (!(alpha == LinearMap::identity(space)))
    f.maps.emplace("alpha", alpha);
  return f;
}

} // namespace

AlgebraFile algebra_file_from(const HomAssociativeSuperalgebra &A) {
  AlgebraFile f = base_file(AlgebraKind::hom_associative, A.space, A.alpha);
  f.commutative = A.commutative;
  f.products.emplace("mu", A.mu);
  return f;
}

AlgebraFile algebra_file_from(const HomLieSuperalgebra &L) {
  AlgebraFile f = base_file(AlgebraKind::hom_lie, L.space, L.alpha);
  f.products.emplace("bracket", L.bracket);
  return f;
}

AlgebraFile algebra_file_from(const HomPoissonSuperalgebra &P) {
  AlgebraFile f = base_file(AlgebraKind::hom_poisson, P.space, P.alpha);
  f.commutative = P.commutative;
  f.products.emplace("bracket", P.bracket);
  f.products.emplace("mu", P.mu);
  return f;
}

AlgebraFile algebra_file_from(const NaryHomNambuSuperalgebra &N) {
  AlgebraFile f = base_file(AlgebraKind::nary_nambu, N.space, N.alpha());
  f.arity = N.n;
  f.multiplicative = N.multiplicative;
  f.products.emplace("bracket", N.bracket);
  return f;
}

AlgebraFile algebra_file_from(const NaryHomNambuPoissonSuperalgebra &P) {
  AlgebraFile f =
      base_file(AlgebraKind::nary_nambu_poisson, P.base.space, P.base.alpha());
  f.arity = P.base.n;
  f.multiplicative = P.base.multiplicative;
  f.commutative = P.commutative;
  f.products.emplace("bracket", P.base.bracket);
  f.products.emplace("mu", P.mu);
  return f;
}

} // namespace hnk
