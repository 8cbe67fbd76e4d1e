#include "lied/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lied {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("json: field \"") + key + "\" is not an integer");
  return v.get<int>();
}

std::string key_of(const MultiMap::Degrees& p) {
  std::string s;
  for (size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
  return s;
}

MultiMap::Degrees degrees_of(const std::string& key) {
  MultiMap::Degrees p;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
      throw std::invalid_argument("json: bad block key \"" + key + "\"");
    p.push_back(std::stoi(item));
  }
  return p;
}

json maps_json(const std::map<std::string, MultiMap>& maps) {
  json out = json::object();
  for (auto& [name, m] : maps)
    if (!m.is_zero()) out[name] = to_json(m);
  return out;
}

void check_schema(const json& j, const char* schema) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != schema)
    throw std::invalid_argument(std::string("json: expected schema ") + schema);
}

void read_maps(const json& j, const std::vector<MapSpec>& specs, std::map<std::string, MultiMap>& maps,
               const ComplexPtr& src, const ComplexPtr& tgt) {
  const json& m = j.contains("maps") ? j.at("maps") : json::object();
  if (!m.is_object()) throw std::invalid_argument("json: \"maps\" must be an object");
  for (auto& [name, v] : m.items()) {
    bool known = false;
    for (auto& s : specs) known = known || s.name == name;
    if (!known) throw std::invalid_argument("json: unknown map \"" + name + "\"");
  }
  for (auto& s : specs)
    if (m.contains(s.name)) maps[s.name] = map_from_json(m.at(s.name), src, tgt, s.arity, s.degree);
}

}  // namespace

json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("json: rational must be a string \"num/den\" or an integer");
}

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

QMatrix matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("json: expected " + std::to_string(rows) + " rows");
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw std::invalid_argument("json: expected " + std::to_string(cols) + " columns in row " + std::to_string(r));
    for (int c = 0; c < cols; ++c) m(r, c) = rat_from_json(j[r][c]);
  }
  return m;
}

json to_json(const Complex3& c) {
  return {{"dims", c.dims}, {"d1", to_json(c.d1)}, {"d2", to_json(c.d2)}};
}

ComplexPtr complex_from_json(const json& j) {
  const json& d = need(j, "dims");
  if (!d.is_array() || d.size() != 3) throw std::invalid_argument("json: dims must have three entries");
  std::array<int, 3> dims{};
  for (int k = 0; k < 3; ++k) {
    if (!d[k].is_number_integer() || d[k].get<int>() < 0) throw std::invalid_argument("json: bad dimension");
    dims[k] = d[k].get<int>();
  }
  QMatrix d1 = j.contains("d1") ? matrix_from_json(j.at("d1"), dims[0], dims[1]) : QMatrix(dims[0], dims[1]);
  QMatrix d2 = j.contains("d2") ? matrix_from_json(j.at("d2"), dims[1], dims[2]) : QMatrix(dims[1], dims[2]);
  return share(Complex3::make(dims, d1, d2));
}

json to_json(const MultiMap& m) {
  json blocks = json::object();
  for (auto& [p, b] : m.blocks()) blocks[key_of(p)] = to_json(b);
  return {{"arity", m.arity()}, {"degree", m.degree()}, {"blocks", blocks}};
}

MultiMap map_from_json(const json& j, const ComplexPtr& src, const ComplexPtr& tgt, int arity, int degree) {
  if (j.contains("arity") && need_int(j, "arity") != arity)
    throw std::invalid_argument("json: map arity should be " + std::to_string(arity));
  if (j.contains("degree") && need_int(j, "degree") != degree)
    throw std::invalid_argument("json: map degree should be " + std::to_string(degree));
  MultiMap m(src, tgt, arity, degree);
  const json& b = need(j, "blocks");
  if (!b.is_object()) throw std::invalid_argument("json: \"blocks\" must be an object");
  for (auto& [key, rows] : b.items()) {
    MultiMap::Degrees p = degrees_of(key);
    if (!m.in_window(p)) throw std::invalid_argument("json: block \"" + key + "\" outside the degree window");
    m.set_block(p, matrix_from_json(rows, m.rows(p), m.cols(p)));
  }
  return m;
}

json to_json(const WeakLie3Structure& s) {
  return {{"schema", "lied/wlie3/1"}, {"complex", to_json(*s.complex)}, {"maps", maps_json(s.maps)}};
}

WeakLie3Structure structure_from_json(const json& j) {
  check_schema(j, "lied/wlie3/1");
  WeakLie3Structure s = WeakLie3Structure::zero(complex_from_json(need(j, "complex")));
  read_maps(j, structure_map_specs(), s.maps, s.complex, s.complex);
  return s;
}

json to_json(const WeakMorphism& f) {
  return {{"schema", "lied/morphism/1"},
          {"source", to_json(f.source)},
          {"target", to_json(f.target)},
          {"maps", maps_json(f.maps)}};
}

WeakMorphism morphism_from_json(const json& j) {
  check_schema(j, "lied/morphism/1");
  WeakLie3Structure src = structure_from_json(need(j, "source"));
  WeakLie3Structure tgt = structure_from_json(need(j, "target"));
  WeakMorphism f = WeakMorphism::strict(src, tgt, MultiMap(src.complex, tgt.complex, 1, 0));
  read_maps(j, morphism_map_specs(), f.maps, src.complex, tgt.complex);
  return f;
}

json to_json(const DeformationRetract& r) {
  return {{"schema", "lied/retract/1"}, {"big", to_json(*r.big)}, {"small", to_json(*r.small)},
          {"p", to_json(r.p)},          {"i", to_json(r.i)},      {"h", to_json(r.h)}};
}

DeformationRetract retract_from_json(const json& j) {
  check_schema(j, "lied/retract/1");
  DeformationRetract r;
  r.big = complex_from_json(need(j, "big"));
  r.small = complex_from_json(need(j, "small"));
  r.p = map_from_json(need(j, "p"), r.big, r.small, 1, 0);
  r.i = map_from_json(need(j, "i"), r.small, r.big, 1, 0);
  r.h = map_from_json(need(j, "h"), r.big, r.big, 1, 1);
  return r;
}

json to_json(const Lie3Structure& t) {
  return {{"schema", "lied/lie3/1"},
          {"complex", to_json(*t.complex)},
          {"maps", maps_json({{"l2", t.l2}, {"l3", t.l3}, {"l4", t.l4}})}};
}

json to_json(const Lie3Morphism& f) {
  return {{"schema", "lied/lie3-morphism/1"},
          {"source", to_json(f.source)},
          {"target", to_json(f.target)},
          {"maps", maps_json({{"f1", f.f1}, {"f2", f.f2}, {"f3", f.f3}})}};
}

json to_json(const CLWXData& x) {
  return {{"schema", "lied/clwx/1"},
          {"E0", x.e0()},
          {"E1", x.e1()},
          {"F", x.f()},
          {"partial", to_json(x.complex->d1)},
          {"D", to_json(x.complex->d2)},
          {"circ", to_json(x.circ)},
          {"Omega", to_json(x.omega)},
          {"S", to_json(x.S)},
          {"rho", to_json(x.rho)}};
}

CLWXData clwx_from_json(const json& j) {
  check_schema(j, "lied/clwx/1");
  std::array<int, 3> dims{need_int(j, "E0"), need_int(j, "E1"), need_int(j, "F")};
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("json: negative dimension");
  QMatrix partial = j.contains("partial") ? matrix_from_json(j.at("partial"), dims[0], dims[1]) : QMatrix(dims[0], dims[1]);
  QMatrix D = j.contains("D") ? matrix_from_json(j.at("D"), dims[1], dims[2]) : QMatrix(dims[1], dims[2]);
  if (!(partial * D).is_zero()) throw std::invalid_argument("json: partial D != 0");
  CLWXData x = CLWXData::zero(share(Complex3::make(dims, partial, D)));
  auto read = [&](const char* key, MultiMap& m) {
    if (j.contains(key)) m = map_from_json(j.at(key), x.complex, x.complex, m.arity(), m.degree());
  };
  read("circ", x.circ);
  read("Omega", x.omega);
  read("S", x.S);
  read("rho", x.rho);
  return x;
}

json to_json(const Report& r) {
  json rows = json::array();
  for (auto& c : r) rows.push_back({{"label", c.label}, {"subject", c.subject}, {"ok", c.ok}, {"detail", c.detail}});
  return rows;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace lied
