#include "serial.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace jetgeom {

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  // grevlex descending, matching the printed order
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term = Json::array();
    term.push_back(rat_str(it->second));
    term.push_back(it->first);
    terms.push_back(term);
  }
  return terms;
}

Poly poly_from_json(const Json& j, int nvars) {
  if (!j.is_array()) fail(Errc::Parse, "polynomial must be an array of [coeff, exponents] terms");
  Poly p(nvars);
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array())
      fail(Errc::Parse, "term must be [\"p/q\", [e0, e1, ...]]");
    if (static_cast<int>(term[1].size()) != nvars)
      fail(Errc::Parse, "exponent row of wrong length (expected " + std::to_string(nvars) + ")");
    Exp e;
    for (const Json& x : term[1]) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        fail(Errc::Parse, "exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    p.add_term(e, rat_parse(term[0].get<std::string>()));
  }
  return p;
}

Json spec_to_json(const VarietySpec& spec) {
  Json j;
  j["vars"] = spec.nvars();
  Json gens = Json::array();
  for (const Poly& g : spec.gens) gens.push_back(poly_to_json(g));
  j["gens"] = gens;
  if (!spec.label.empty()) j["label"] = spec.label;
  return j;
}

VarietySpec spec_from_json(const Json& j) {
  if (!j.contains("vars") || !j["vars"].is_number_integer())
    fail(Errc::Parse, "variety file needs integer \"vars\"");
  int nvars = j["vars"].get<int>();
  if (nvars < 2) fail(Errc::Parse, "\"vars\" must be >= 2");
  if (!j.contains("gens") || !j["gens"].is_array()) fail(Errc::Parse, "variety file needs \"gens\"");
  const Json& gens = j["gens"];
  std::vector<Poly> polys;
  // A flat [coeff, exps] term list is accepted as a single generator.
  bool flat = !gens.empty() && gens[0].is_array() && gens[0].size() == 2 && gens[0][0].is_string();
  if (flat) {
    polys.push_back(poly_from_json(gens, nvars));
  } else {
    for (const Json& g : gens) polys.push_back(poly_from_json(g, nvars));
  }
  for (const Poly& g : polys)
    if (!g.is_homogeneous()) fail(Errc::Parse, "non-homogeneous generator in variety file");
  std::string label = j.contains("label") ? j["label"].get<std::string>() : "";
  return VarietySpec(nvars - 1, polys, label);
}

Json chart_to_json(const Chart& chart) {
  Json j;
  j["n"] = chart.n;
  j["c"] = chart.c;
  j["order"] = chart.order;
  Json jets = Json::array();
  for (const Poly& f : chart.jets) jets.push_back(poly_to_json(f));
  j["jets"] = jets;
  return j;
}

Chart chart_from_json(const Json& j) {
  for (const char* key : {"n", "c", "jets"})
    if (!j.contains(key)) fail(Errc::Parse, std::string("chart file needs \"") + key + "\"");
  int n = j["n"].get<int>();
  int c = j["c"].get<int>();
  int order = j.contains("order") ? j["order"].get<int>() : 5;
  if (!j["jets"].is_array() || static_cast<int>(j["jets"].size()) != c)
    fail(Errc::Parse, "chart file needs exactly c jets");
  std::vector<Poly> jets;
  for (const Json& f : j["jets"]) jets.push_back(poly_from_json(f, n));
  return chart_from_graph(jets, order);
}

Json matrix_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (const RatVec& r : m) {
    Json row = Json::array();
    for (const Rat& x : r) row.push_back(rat_str(x));
    rows.push_back(row);
  }
  return rows;
}

RatMat matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::Parse, "matrix must be an array of rows");
  RatMat m;
  for (const Json& row : j) {
    if (!row.is_array()) fail(Errc::Parse, "matrix row must be an array");
    RatVec r;
    for (const Json& x : row) {
      if (!x.is_string()) fail(Errc::Parse, "matrix entries are \"p/q\" strings");
      r.push_back(rat_parse(x.get<std::string>()));
    }
    m.push_back(r);
  }
  return m;
}

namespace {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries the line/column position of the failure
    fail(Errc::Parse, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

InputObject parse_input_text(const std::string& text) {
  Json j = parse_json_text(text);
  if (j.contains("jets")) return chart_from_json(j);
  if (j.contains("gens")) return spec_from_json(j);
  fail(Errc::Parse, "input must contain \"gens\" (variety) or \"jets\" (chart)");
}

InputObject parse_input_file(const std::string& path) { return parse_input_text(read_file(path)); }

QuadricPencil parse_pencil_file(const std::string& path) {
  Json j = parse_json_text(read_file(path));
  if (!j.contains("A") || !j.contains("B")) fail(Errc::Parse, "pencil file needs \"A\" and \"B\"");
  RatMat a = matrix_from_json(j["A"]);
  RatMat b = matrix_from_json(j["B"]);
  return make_pencil(a, b);
}

RatVec parse_point(const std::string& csv) {
  RatVec out;
  std::string token;
  std::istringstream ss(csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) fail(Errc::Parse, "empty coordinate in point");
    out.push_back(rat_parse(token));
  }
  if (out.empty()) fail(Errc::Parse, "empty point");
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream outfile(path);
  if (!outfile) fail(Errc::Io, "cannot write '" + path + "'");
  outfile << text;
}

}  // namespace jetgeom
