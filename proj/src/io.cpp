#include "qhr/io.hpp"

#include <algorithm>
#include <fstream>

namespace qhr {

using nlohmann::json;

namespace {

json field_to_json(const FieldSpec& f) {
  json j;
  if (f.kind == FieldKind::rational) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "cyclotomic";
    j["order"] = f.order;
  }
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field: expected object with kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "cyclotomic") {
    int order = j.at("order").get<int>();
    if (order < 1) throw ParseError("field: cyclotomic order must be positive");
    return FieldSpec::cyclotomic(order);
  }
  throw ParseError("field: unknown kind '" + kind + "'");
}

json scalar_vector_to_json(const std::vector<Scalar>& v) {
  json j = json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

std::vector<Scalar> scalar_vector_from_json(const json& j, const FieldSpec& f, int dim,
                                            const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(what + ": expected array of length " + std::to_string(dim));
  std::vector<Scalar> v;
  for (const auto& e : j) v.push_back(Scalar::parse(f, e.get<std::string>()));
  return v;
}

json mult_to_json(const Algebra& a) {
  // entries [i, j, k, c], sorted lexicographically by index triple
  json entries = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      auto row = a.mult_row(i, j);
      std::sort(row.begin(), row.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      for (const auto& [k, c] : row) entries.push_back({i, j, k, c.to_string()});
    }
  return entries;
}

json comult_to_json(const HopfAlgebra& h) {
  json entries = json::array();
  for (int i = 0; i < h.dim; ++i) {
    auto row = h.comult_row(i);
    std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) {
      return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
    });
    for (const auto& [j, k, c] : row) entries.push_back({i, j, k, c.to_string()});
  }
  return entries;
}

json antipode_to_json(const HopfAlgebra& h) {
  json entries = json::array();
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      if (!h.antipode.at(i, j).is_zero()) entries.push_back({i, j, h.antipode.at(i, j).to_string()});
  return entries;
}

int checked_index(const json& e, size_t pos, int dim, const std::string& what) {
  int v = e.at(pos).get<int>();
  if (v < 0 || v >= dim) throw ParseError(what + ": index " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
  json j;
  j["name"] = a.name;
  j["field"] = field_to_json(a.field);
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  j["is_hopf"] = false;
  j["unit"] = scalar_vector_to_json(a.unit);
  j["mult"] = mult_to_json(a);
  return j;
}

json hopf_to_json(const HopfAlgebra& h) {
  json j = algebra_to_json(h);
  j["is_hopf"] = true;
  j["counit"] = scalar_vector_to_json(h.counit);
  j["comult"] = comult_to_json(h);
  j["antipode"] = antipode_to_json(h);
  return j;
}

LoadedAlgebra algebra_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    FieldSpec f = field_from_json(j.at("field"));
    int dim = j.at("dim").get<int>();
    if (dim < 1) throw ParseError("dim must be positive");
    Algebra base;
    base.name = j.at("name").get<std::string>();
    base.field = f;
    base.dim = dim;
    base.basis = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(base.basis.size()) != dim)
      throw ParseError("basis: expected " + std::to_string(dim) + " labels");
    base.unit = scalar_vector_from_json(j.at("unit"), f, dim, "unit");
    base.mult.assign(static_cast<size_t>(dim) * dim, {});
    for (const auto& e : j.at("mult")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("mult: expected [i, j, k, scalar]");
      int i = checked_index(e, 0, dim, "mult");
      int jj = checked_index(e, 1, dim, "mult");
      int k = checked_index(e, 2, dim, "mult");
      Scalar c = Scalar::parse(f, e.at(3).get<std::string>());
      base.mult[static_cast<size_t>(i) * dim + jj].push_back({k, c});
    }
    LoadedAlgebra out;
    out.is_hopf = j.value("is_hopf", false);
    if (!out.is_hopf) {
      out.algebra = std::make_shared<const Algebra>(std::move(base));
      return out;
    }
    HopfAlgebra h;
    static_cast<Algebra&>(h) = std::move(base);
    h.counit = scalar_vector_from_json(j.at("counit"), f, dim, "counit");
    h.comult.assign(dim, {});
    for (const auto& e : j.at("comult")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("comult: expected [i, j, k, scalar]");
      int i = checked_index(e, 0, dim, "comult");
      int jj = checked_index(e, 1, dim, "comult");
      int k = checked_index(e, 2, dim, "comult");
      Scalar c = Scalar::parse(f, e.at(3).get<std::string>());
      h.comult[i].emplace_back(jj, k, c);
    }
    h.antipode = Matrix(dim, dim, f);
    for (const auto& e : j.at("antipode")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("antipode: expected [i, j, scalar]");
      int i = checked_index(e, 0, dim, "antipode");
      int jj = checked_index(e, 1, dim, "antipode");
      h.antipode.at(i, jj) = Scalar::parse(f, e.at(2).get<std::string>());
    }
    HopfPtr hp = finalize_hopf(std::move(h));
    out.hopf = hp;
    out.algebra = hp;
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return algebra_from_json(j);
}

void save_algebra_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << canonical_dump(j);
}

}  // namespace qhr
