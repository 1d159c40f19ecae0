#include "twgr/serialize.hpp"

#include <fstream>
#include <sstream>

#include "twgr/error.hpp"

namespace twgr {

namespace {

template <class F>
auto guarded(const char* what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Fq parse_entry(const Field& f, const json& v) {
  if (v.is_string()) return f.parse(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  throw InvalidInput("field element must be a digit string or an integer");
}

}  // namespace

json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  return guarded("field", [&] {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto m = j.contains("m") ? j.at("m").get<std::uint32_t>() : 1u;
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return make_field(p, m, modulus);
  });
}

std::string matrix_to_csv(const Matrix& m) {
  const Field& f = *m.field();
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += f.format(m(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix matrix_from_csv(FieldPtr field, std::string_view text) {
  std::vector<Vec> rows;
  std::size_t cols = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Vec row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(field->parse(cell));
    if (rows.empty()) cols = row.size();
    if (row.size() != cols) throw InvalidInput("CSV matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(std::move(field), rows, cols);
}

json matrix_to_json(const Matrix& m) {
  const Field& f = *m.field();
  json entries = json::array();
  for (auto x : m.entries()) entries.push_back(f.format(x));
  return json{{"field", field_to_json(f)}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j, FieldPtr field) {
  return guarded("matrix", [&] {
    if (!field) field = field_from_json(j.at("field"));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows * cols) throw InvalidInput("matrix entry count does not match its shape");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i / cols, i % cols) = parse_entry(*field, entries[i]);
    return m;
  });
}

json group_to_json(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Dihedral:
      return json{{"kind", "dihedral"}, {"n", g.dihedral_n()}};
    case GroupKind::Abelian:
      return json{{"kind", "abelian"}, {"orders", g.abelian_orders()}};
    case GroupKind::Table:
      break;
  }
  json relators = json::array();
  for (const auto& w : g.relators()) {
    json word = json::array();
    for (const auto& l : w) word.push_back(l.to_signed());
    relators.push_back(word);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.order(); ++i) names.push_back(g.name(i));
  return json{{"kind", "table"},
              {"mul", g.table()},
              {"generators", g.generators()},
              {"relators", relators},
              {"names", names}};
}

GroupPtr group_from_json(const json& j) {
  return guarded("group", [&]() -> GroupPtr {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "dihedral") return dihedral(j.at("n").get<std::size_t>());
    if (kind == "abelian") return abelian(j.at("orders").get<std::vector<std::size_t>>());
    if (kind != "table") throw InvalidInput("unknown group kind '" + kind + "'");
    auto mul = j.at("mul").get<std::vector<std::vector<GroupElem>>>();
    auto gens = j.at("generators").get<std::vector<GroupElem>>();
    std::vector<Word> relators;
    for (const auto& w : j.at("relators")) {
      Word word;
      for (const auto& l : w) word.push_back(Letter::from_signed(l.get<long>()));
      relators.push_back(std::move(word));
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return std::make_shared<const Group>(
        Group::from_table(std::move(mul), std::move(gens), std::move(relators), std::move(names)));
  });
}

json cocycle_to_json(const Cocycle& c) {
  switch (c.kind()) {
    case CocycleKind::Trivial: return json{{"kind", "trivial"}};
    case CocycleKind::Alpha1: return json{{"kind", "dihedral_alpha1"}};
    case CocycleKind::Alpha2: return json{{"kind", "dihedral_alpha2"}};
    case CocycleKind::Alpha3: return json{{"kind", "dihedral_alpha3"}};
    case CocycleKind::Table: break;
  }
  const Field& f = *c.field();
  const std::size_t n = c.group()->order();
  json entries = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(f.format(c(x, y)));
    entries.push_back(row);
  }
  return json{{"kind", "table"}, {"entries", entries}};
}

Cocycle cocycle_from_json(const json& j, GroupPtr group, FieldPtr field) {
  return guarded("cocycle", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "trivial") return trivial_cocycle(group, field);
    if (kind == "dihedral_alpha1") return dihedral_cocycle(CocycleKind::Alpha1, group, field);
    if (kind == "dihedral_alpha2") return dihedral_cocycle(CocycleKind::Alpha2, group, field);
    if (kind == "dihedral_alpha3") return dihedral_cocycle(CocycleKind::Alpha3, group, field);
    if (kind != "table") throw InvalidInput("unknown cocycle kind '" + kind + "'");
    const auto& entries = j.at("entries");
    const std::size_t n = group->order();
    if (entries.size() != n) throw InvalidInput("cocycle table must have |G| rows");
    std::vector<Fq> table;
    for (const auto& row : entries) {
      if (row.size() != n) throw InvalidInput("cocycle table must have |G| columns");
      for (const auto& v : row) table.push_back(parse_entry(*field, v));
    }
    return Cocycle(group, field, std::move(table));
  });
}

json ring_elem_to_json(const RingElem& a) {
  const Field& f = *a.ring()->field();
  const Group& g = *a.ring()->group();
  json out = json::object();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].code != 0) out[g.name(i)] = f.format(a.coeffs()[i]);
  }
  return out;
}

RingElem ring_elem_from_json(const json& j, const RingPtr& ring) {
  return guarded("ring element", [&] {
    if (!j.is_object()) throw InvalidInput("ring element must be an object of name: coefficient");
    const Group& g = *ring->group();
    const Field& f = *ring->field();
    Vec v(ring->dim(), Fq{0});
    for (const auto& [name, coeff] : j.items()) {
      const auto e = g.find(name);
      if (!e) throw InvalidInput("unknown group element '" + name + "'");
      v[*e] = f.add(v[*e], parse_entry(f, coeff));
    }
    return ring->element(std::move(v));
  });
}

json derivation_to_json(const Derivation& d) {
  const Group& g = *d.ring()->group();
  json images = json::object();
  for (std::size_t i = 0; i < g.order(); ++i) images[g.name(i)] = ring_elem_to_json(d.image(i));
  return json{{"images", images}};
}

Derivation derivation_from_json(const json& j, const RingPtr& ring) {
  return guarded("derivation", [&] {
    const Group& g = *ring->group();
    std::vector<Vec> images(g.order(), Vec(ring->dim(), Fq{0}));
    for (const auto& [name, img] : j.at("images").items()) {
      const auto e = g.find(name);
      if (!e) throw InvalidInput("unknown group element '" + name + "'");
      images[*e] = ring_elem_from_json(img, ring).coeffs();
    }
    return Derivation(ring, std::move(images));
  });
}

json generator_map_to_json(const GeneratorMap& f) {
  json images = json::array();
  for (std::size_t i = 0; i < f.images().size(); ++i) images.push_back(ring_elem_to_json(f.image(i)));
  return json{{"f", images}};
}

GeneratorMap generator_map_from_json(const json& j, const RingPtr& ring) {
  return guarded("generator map", [&] {
    std::vector<Vec> images;
    for (const auto& img : j.at("f")) images.push_back(ring_elem_from_json(img, ring).coeffs());
    return GeneratorMap(ring, std::move(images));
  });
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace twgr
