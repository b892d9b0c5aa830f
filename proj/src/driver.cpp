#include "evreg/driver.hpp"

#include <algorithm>
#include <variant>

#include "evreg/skewprod.hpp"

namespace evreg {

namespace {

constexpr std::int64_t kJsonSafe = std::int64_t{1} << 53;

Json points_json(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.to_string());
  return a;
}

Json degrees_json(const std::vector<std::int64_t>& d) {
  Json a = Json::array();
  for (auto v : d) a.push_back(json_integer(v));
  return a;
}

int int_flag(const Command& c, const std::string& name, int fallback) {
  const auto it = c.flags.find(name);
  return it == c.flags.end() ? fallback : std::stoi(it->second);
}

Json analyze(const MapDef& m, const RunOptions&) {
  const ProjSelfMap phi = to_proj_map(m.data);
  const PointSet ind = rational_indeterminacy_points(phi);
  Json r;
  r["kind"] = kind_name(m.data);
  r["map"] = phi.to_string();
  r["degree"] = json_integer(phi.degree());
  r["regular"] = ind.completeness == Completeness::Empty;
  r["dominant"] = is_dominant(phi);
  r["invertible"] = is_invertible_endo(phi);
  r["indeterminacy_points"] = points_json(ind.points);
  r["indeterminacy_certificate"] = to_string(ind.completeness);
  return r;
}

Json iterate_cmd(const MapDef& m, const Command& c, const RunOptions& opts) {
  const int n = int_flag(c, "n", 1);
  const ProjSelfMap phi = iterate(to_proj_map(m.data), n, opts.degree_cap);
  Json r;
  r["n"] = n;
  r["map"] = phi.to_string();
  r["degree"] = json_integer(phi.degree());
  r["regular"] = is_regular(phi);
  return r;
}

Json first_regular_json(const IterationReport& rep, const ProjSelfMap& phi) {
  Json r;
  r["first_regular"] = rep.first_regular ? Json(*rep.first_regular) : Json(nullptr);
  r["degree_sequence"] = degrees_json(rep.degree_sequence);
  r["invertible"] = rep.invertible_flag;
  r["dominant"] = rep.dominant_flag;
  r["certificate"] = to_string(rep.certificate);
  r["indeterminacy_points"] = points_json(rational_indeterminacy_points(phi).points);
  return r;
}

Json degrees_cmd(const MapDef& m, const Command& c, const RunOptions& opts) {
  const DegreeReport d = degree_sequence(to_proj_map(m.data), int_flag(c, "n", 1), opts.degree_cap);
  Json r;
  r["n"] = d.n;
  r["degrees"] = degrees_json(d.degrees);
  r["final_degree"] = json_integer(d.final_degree);
  r["lambda1"] = d.lambda1_decimal;
  return r;
}

const MonomialMap& require_monomial(const MapDef& m, const Command& c) {
  const auto* mm = std::get_if<MonomialMap>(&m.data);
  if (!mm) {
    throw Error(ErrorCode::UnsupportedCommand,
                c.verb + " needs a monomial map; '" + m.name + "' is " + std::string(kind_name(m.data)));
  }
  return *mm;
}

Json fan_check(const MapDef& m, const Command& c, const RunOptions& opts) {
  const MonomialMap& mm = require_monomial(m, c);
  const std::string surface = c.flags.at("surface");
  const Fan fan = Fan::for_surface(surface);
  Json r;
  r["surface"] = surface;
  r["matrix"] = mm.matrix().to_string();
  if (c.flags.contains("power")) {
    const int k = int_flag(c, "power", 1);
    r["power"] = k;
    r["compatible"] = fan_compatible(mm.matrix().pow(k), fan);
  } else {
    const int cap = int_flag(c, "cap", opts.power_cap);
    const auto k = first_extendable_power(mm, fan, cap);
    r["cap"] = cap;
    r["first_extendable_power"] = k ? Json(*k) : Json(nullptr);
  }
  return r;
}

Json classify(const MapDef& m, const RunOptions& opts) {
  Json r;
  r["kind"] = kind_name(m.data);
  if (const auto* mm = std::get_if<MonomialMap>(&m.data)) {
    const IntMatrix2& a = mm->matrix();
    r["matrix"] = a.to_string();
    r["det"] = json_integer(a.det());
    r["trace"] = json_integer(a.trace());
    const auto cls = ratio_root_of_unity_class(a);
    r["ratio_root_of_unity_order"] = cls ? Json(*cls) : Json(nullptr);
    const auto diag = smallest_diagonal_power(a, opts.power_cap);
    r["smallest_diagonal_power"] = diag ? Json(*diag) : Json(nullptr);
    const auto sc = smallest_scalar_positive_power(a, opts.power_cap);
    if (sc) {
      Json s;
      s["k"] = sc->k;
      s["d"] = json_integer(sc->d);
      r["scalar_power"] = s;
    } else {
      r["scalar_power"] = nullptr;
    }
    return r;
  }
  if (const auto* t = std::get_if<TriangularMap>(&m.data)) {
    const auto k = first_linear_iterate(*t, opts.power_cap);
    r["cap"] = opts.power_cap;
    r["first_linear_iterate"] = k ? Json(*k) : Json(nullptr);
    return r;
  }
  if (const auto* sk = std::get_if<SkewMap>(&m.data)) {
    r["fiber_degree"] = sk->fiber_degree();
    bool holds = true;
    for (int k = 1; k <= 3 && holds; ++k) holds = leading_coeff_identity_check(*sk, k, opts.degree_cap);
    r["leading_coeff_identity"] = holds;
    return r;
  }
  const ProjSelfMap phi = to_proj_map(m.data);
  if (phi.degree() != 1) {
    throw Error(ErrorCode::UnsupportedCommand,
                "classify needs a monomial, triangular, skew or degree-one map; '" + m.name + "' has degree " +
                    std::to_string(phi.degree()));
  }
  const LinearAutoClass cls = classify_linear_auto(linear_coefficients(phi));
  r["case"] = to_string(cls.which);
  Json eig = Json::array();
  for (const auto& e : cls.eigen_data) {
    Json j;
    j["value"] = to_string(e.value);
    j["blocks"] = e.block_sizes;
    eig.push_back(j);
  }
  r["eigenvalues"] = eig;
  return r;
}

}  // namespace

Json json_integer(const Integer& v) {
  if (v.fits_slong_p() && v.get_si() <= kJsonSafe && v.get_si() >= -kJsonSafe) return Json(v.get_si());
  return Json(v.get_str());
}

Json json_integer(std::int64_t v) {
  if (v <= kJsonSafe && v >= -kJsonSafe) return Json(v);
  return Json(std::to_string(v));
}

Json Report::to_json() const {
  Json j;
  j["line"] = line;
  j["command"] = command;
  j["status"] = ok ? "ok" : "error";
  if (!result.is_null()) j["result"] = result;
  if (error) {
    Json e;
    e["code"] = to_string(*error);
    e["message"] = error_message;
    j["error"] = e;
  }
  return j;
}

Report run_command(const Session& s, const Command& c, const RunOptions& opts) {
  Report rep;
  rep.line = c.line;
  rep.command = c.to_string();
  try {
    const MapDef& m = s.find(c.target);
    if (c.verb == "analyze") {
      rep.result = analyze(m, opts);
    } else if (c.verb == "iterate") {
      rep.result = iterate_cmd(m, c, opts);
    } else if (c.verb == "first-regular") {
      const ProjSelfMap phi = to_proj_map(m.data);
      const IterationReport ir = first_regular_iterate(phi, int_flag(c, "cap", opts.regular_cap), opts.degree_cap);
      rep.result = first_regular_json(ir, phi);
      if (c.flags.contains("expect")) {
        const int want = int_flag(c, "expect", 0);
        if (ir.first_regular != want) {
          throw Error(ErrorCode::GoldenMismatch,
                      "'" + m.name + "' expected first regular iterate " + std::to_string(want) + ", got " +
                          (ir.first_regular ? std::to_string(*ir.first_regular) : std::string("none")));
        }
      }
    } else if (c.verb == "degrees") {
      rep.result = degrees_cmd(m, c, opts);
    } else if (c.verb == "fan-check") {
      rep.result = fan_check(m, c, opts);
    } else if (c.verb == "classify") {
      rep.result = classify(m, opts);
    } else {
      throw Error(ErrorCode::UnsupportedCommand, "unknown command '" + c.verb + "'");
    }
  } catch (const Error& e) {
    rep.ok = false;
    rep.error = e.code();
    rep.error_message = e.what();
  }
  return rep;
}

std::vector<Report> run(const Session& s, const RunOptions& opts) {
  std::vector<Report> out;
  out.reserve(s.commands.size());
  for (const auto& c : s.commands) out.push_back(run_command(s, c, opts));
  return out;
}

int exit_code(const std::vector<Report>& reports) {
  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.ok) continue;
    if (r.error == ErrorCode::GoldenMismatch) return kExitGoldenMismatch;
    code = kExitCommandError;
  }
  return code;
}

std::string format_json(const std::vector<Report>& reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(r.to_json());
  return a.dump(2) + "\n";
}

std::string format_text(const std::vector<Report>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "line " + std::to_string(r.line) + ": " + r.command + ": ";
    if (r.ok) {
      out += "ok " + r.result.dump();
    } else {
      out += "error " + r.error_message;
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- golden corpus

namespace {

const MapData& only_map(const Session& s) { return s.maps.at(0).data; }

MapData golden_map(const std::string& field, const std::string& decl) {
  return only_map(parse_session("field " + field + "\nmap m " + decl + "\n"));
}

ProjSelfMap golden_form(const std::string& field, const std::string& forms) {
  return to_proj_map(golden_map(field, "proj " + forms));
}

GoldenCase monomial_case(const std::string& name, const std::string& matrix, int k, long d) {
  const std::string e = std::to_string(d);
  return GoldenCase{name,
                    golden_map("rational", "monomial A=" + matrix + " lambda=(1,1)"),
                    k,
                    Certificate::InIndexSet,
                    golden_form("rational", "[X^" + e + " : Y^" + e + " : Z^" + e + "]"),
                    kDefaultRegularCap};
}

}  // namespace

std::vector<GoldenCase> builtin_corpus() {
  std::vector<GoldenCase> c;
  c.push_back({"squares-and-inverse", golden_map("rational", "affine (x^2, y^-2)"), 2, Certificate::InIndexSet,
               golden_form("rational", "[X^4 : Y^4 : Z^4]"), kDefaultRegularCap});
  c.push_back({"quadratic-shear", golden_map("rational", "affine (x + y, x^2 + y)"), 2, Certificate::InIndexSet,
               golden_form("rational", "[X^2 + X*Z + 2*Y*Z : 2*X^2 + 2*X*Y + Y^2 + Y*Z : Z^2]"), kDefaultRegularCap});
  c.push_back(monomial_case("monomial-order-12", "[[3,1],[-3,3]]", 12, 2985984));
  c.push_back(monomial_case("monomial-order-3", "[[-2,-2],[2,0]]", 3, 8));
  c.push_back(monomial_case("monomial-order-4", "[[0,-2],[2,0]]", 4, 16));
  c.push_back(monomial_case("monomial-order-6", "[[2,2],[-2,0]]", 6, 64));
  c.push_back(monomial_case("monomial-order-8", "[[1,1],[-1,1]]", 8, 16));
  // (zeta x, y + x^2) with zeta a primitive 2n-th root of unity.
  const std::pair<int, std::string> cyclotomic[] = {
      {3, "t^2 - t + 1"}, {4, "t^4 + 1"}, {5, "t^4 - t^3 + t^2 - t + 1"}, {6, "t^4 - t^2 + 1"}};
  for (const auto& [n, minpoly] : cyclotomic) {
    const std::string field = "ext minpoly " + minpoly;
    c.push_back({"birational-order-" + std::to_string(n), golden_map(field, "affine (t*x, y + x^2)"), n,
                 Certificate::Invertible, golden_form(field, "[-X : Y : Z]"), kDefaultRegularCap});
  }
  c.push_back({"cremona", golden_map("rational", "proj [Y*Z : X*Z : X*Y]"), 2, Certificate::Invertible,
               golden_form("rational", "[X : Y : Z]"), kDefaultRegularCap});
  c.push_back({"squaring", golden_map("rational", "proj [X^2 : Y^2 : Z^2]"), 1, Certificate::InIndexSet,
               golden_form("rational", "[X^2 : Y^2 : Z^2]"), kDefaultRegularCap});
  return c;
}

std::vector<GoldenCase> corpus_from_session(const Session& s) {
  std::vector<GoldenCase> out;
  for (const auto& c : s.commands) {
    if (c.verb != "first-regular" || !c.flags.contains("expect")) continue;
    out.push_back({c.target, s.find(c.target).data, int_flag(c, "expect", 0), std::nullopt, std::nullopt,
                   int_flag(c, "cap", kDefaultRegularCap)});
  }
  return out;
}

Json VerifyReport::to_json() const {
  Json j;
  Json cases = Json::array();
  for (const auto& o : outcomes) {
    Json c;
    c["name"] = o.name;
    c["status"] = o.ok ? "ok" : "mismatch";
    c["expected"] = o.expected;
    c["observed"] = o.observed ? Json(*o.observed) : Json(nullptr);
    c["certificate"] = o.certificate;
    if (!o.message.empty()) c["message"] = o.message;
    cases.push_back(c);
  }
  j["cases"] = cases;
  j["witnessed"] = witnessed;
  j["index_set_witnessed"] = index_set_witnessed;
  j["status"] = all_ok ? "ok" : "error";
  return j;
}

VerifyReport verify_corpus(const std::vector<GoldenCase>& cases, const RunOptions& opts) {
  VerifyReport rep;
  for (const auto& gc : cases) {
    GoldenOutcome o;
    o.name = gc.name;
    o.expected = gc.expected_first_regular;
    try {
      const IterationReport ir = first_regular_iterate(to_proj_map(gc.map), gc.cap, opts.degree_cap);
      o.observed = ir.first_regular;
      o.certificate = to_string(ir.certificate);
      std::vector<std::string> problems;
      if (ir.first_regular != gc.expected_first_regular) {
        problems.push_back("expected first regular iterate " + std::to_string(gc.expected_first_regular) + ", got " +
                           (ir.first_regular ? std::to_string(*ir.first_regular) : std::string("none")));
      }
      if (gc.expected_certificate && ir.certificate != *gc.expected_certificate) {
        problems.push_back("expected certificate " + std::string(to_string(*gc.expected_certificate)));
      }
      if (gc.expected_iterate && ir.regular_iterate != gc.expected_iterate) {
        problems.push_back("regular iterate differs from " + gc.expected_iterate->to_string());
      }
      if (ir.first_regular && ir.certificate == Certificate::InIndexSet) rep.witnessed.insert(*ir.first_regular);
      o.ok = problems.empty();
      for (const auto& p : problems) o.message += (o.message.empty() ? "" : "; ") + p;
    } catch (const Error& e) {
      o.message = e.what();
    }
    rep.all_ok = rep.all_ok && o.ok;
    rep.outcomes.push_back(std::move(o));
  }
  rep.index_set_witnessed = std::all_of(kRegularIndices.begin(), kRegularIndices.end(),
                                        [&](int k) { return rep.witnessed.contains(k); });
  return rep;
}

void require_all_ok(const VerifyReport& r) {
  for (const auto& o : r.outcomes) {
    if (!o.ok) throw Error(ErrorCode::GoldenMismatch, o.name + ": " + o.message);
  }
}

}  // namespace evreg
