#include "nhodge_cli/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nhodge::cli {

namespace {

Json point_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json points_json(const IntMatrix& all, const PointSet& s) {
  Json out = Json::array();
  for (int i : s.indices()) out.push_back(point_json(all[i]));
  return out;
}

Json rational_list(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Json integer_json(const Integer& x) {
  // 2^53 keeps the value exact in any JSON reader
  static const Integer limit = Integer(1) << 53;
  if (abs(x) < limit) return Json(x.get_si());
  return Json(x.get_str());
}

Json poly_json(const IntPoly& p) {
  using Term = std::pair<IntPoly::Exponents, Integer>;
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const IntPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) < degree(b.first);
    return a.first < b.first;
  });
  Json list = Json::array();
  for (const auto& [e, c] : terms) {
    Json t;
    for (std::size_t i = 0; i < e.size(); ++i) t[p.variables()[i]] = e[i];
    t["coeff"] = c.get_str();
    list.push_back(std::move(t));
  }
  return Json{{"text", p.to_string()}, {"terms", std::move(list)}};
}

Json orders_json(const std::set<Integer>& orders) {
  Json out = Json::array();
  for (const auto& m : orders) out.push_back(integer_json(m));
  return out;
}

Json newton_json(const NewtonData& nd) {
  const auto& s = nd.subdivision();
  const Polytope& P = nd.polytope();
  Json vertices = Json::array();
  Json infinity = Json::array();
  for (const auto& f : P.faces())
    if (f.dim == 0) vertices.push_back(point_json(P.points()[f.points.indices().front()]));
  for (int q : nd.infinity_faces()) infinity.push_back(points_json(P.points(), P.faces()[q].points));

  Json cells = Json::array();
  for (int i = 1; i < s.cell_count(); ++i) {
    const Cell& c = s.cell(i);
    const CellInfo& info = nd.cell(i);
    Json verts = Json::array();
    for (int v : c.vertices) verts.push_back(point_json(s.points()[v]));
    const AffineFunction& nu = s.nu(i);
    cells.push_back(Json{{"index", i},
                         {"dim", c.dim},
                         {"points", points_json(s.points(), c.points)},
                         {"vertices", std::move(verts)},
                         {"m", integer_json(info.m)},
                         {"nu", {{"gradient", rational_list(nu.gradient)}, {"constant", to_string(nu.constant)}}},
                         {"boundary", info.boundary},
                         {"at_infinity", info.at_infinity}});
  }
  return Json{{"dim", nd.dim()},
              {"vertices", std::move(vertices)},
              {"cells", std::move(cells)},
              {"infinity_faces", std::move(infinity)},
              {"bad_orders", orders_json(nd.bad_orders())},
              {"spectrum_order", integer_json(nd.spectrum_order())}};
}

Json predicates_json(const NewtonData& nd) {
  const Predicates p = predicates(nd);
  Json out;
  if (nd.ambient() == Ambient::Affine)
    out["convenient"] = p.is_convenient;
  else
    out["convenient"] = nullptr;
  out["condition_s"] = p.satisfies_condition_s;
  out["p_infinity_cells"] = p.p_infinity_cells;
  out["relevant_faces"] = p.relevant_faces;
  return out;
}

Json spectrum_json(const std::vector<RootOfUnity>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(r.to_string());
  return out;
}

Json hodge_json(const HodgeResult& h) {
  return Json{{"lambda", h.lambda.to_string()},
              {"center", h.center},
              {"concentrated", h.concentrated},
              {"E_uvw", poly_json(h.e_uvw)},
              {"E_uv", poly_json(h.e_uv)},
              {"E_diag", poly_json(h.e_diag)}};
}

Json jordan_json(const JordanTable& via_e, const JordanTable& via_formula) {
  auto blocks = [](const JordanTable& t) {
    Json out = Json::array();
    for (const auto& b : t.blocks) out.push_back(integer_json(b));
    return out;
  };
  return Json{{"lambda", via_e.lambda.to_string()},
              {"via_E", blocks(via_e)},
              {"via_formula", blocks(via_formula)},
              {"agree", via_e == via_formula},
              {"eigenspace_dim", integer_json(via_formula.eigenspace_dim())}};
}

Json multiplicity_json(const MultiplicityFactorization& m) {
  Json factors = Json::array();
  for (const auto& f : m.factors)
    factors.push_back(Json{{"order", integer_json(f.order)}, {"exponent", integer_json(f.exponent)}});
  return Json{{"product", m.to_string()}, {"factors", std::move(factors)}};
}

Json consistency_json(const std::vector<OracleReport>& reports) {
  Json checks = Json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    checks.push_back(Json{{"name", r.name},
                          {"instance", r.digest},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"pass", r.pass}});
  }
  return Json{{"passed", reports.size() - failed}, {"failed", failed}, {"checks", std::move(checks)}};
}

Json document(const std::string& command, const std::vector<TPolynomial>& input) {
  Json polys = Json::array();
  for (const auto& p : input) polys.push_back(to_string(p));
  Json echo;
  if (!input.empty()) {
    echo["ambient"] = to_string(input.front().ambient);
    echo["n"] = input.front().n;
  }
  echo["k"] = input.size();
  echo["polynomials"] = std::move(polys);
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"input", std::move(echo)},
              {"assumptions",
               {"the input is assumed schön: no initial form over a cell of the subdivision vanishes on the torus; "
                "this is not verified",
                "eigenvalues are roots of unity written as reduced phases a/b, lambda = exp(2 pi i a/b)"}}};
}

namespace {

void render(std::ostringstream& out, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    std::string key = j.is_object() ? it.key() : "-";
    bool scalar_list = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
    if (v.is_object() && v.contains("text") && v.contains("terms")) {
      out << indent << key << ": " << v["text"].get<std::string>() << "\n";
    } else if (v.is_structured() && !scalar_list) {
      out << indent << key << ":\n";
      render(out, v, indent + "  ");
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const Json& doc) {
  std::ostringstream out;
  render(out, doc, "");
  return out.str();
}

}  // namespace nhodge::cli
