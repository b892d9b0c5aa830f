#include <gtest/gtest.h>

#include "evreg/driver.hpp"
#include "evreg/error.hpp"
#include "helpers.hpp"

using namespace evreg;
using namespace evreg::testing;

namespace {

template <typename F>
const Error catch_error(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::GoldenMismatch, "none");
}

const char* kCorpus = R"(field rational
# golden maps
map s proj [Y*Z : X*Z : X*Y]
map e21 affine (x^2, y^-2)
map e22 affine (x + y, x^2 + y)
map m monomial A=[[3,1],[-3,3]] lambda=(1,1)
map a2 monomial A=[[0,-2],[2,0]] lambda=(1,1)
map t triangular a=2 c=3 q=y^2
map k skew phi=x^2 f=x*y^2+1
analyze s
first-regular e21
first-regular m --cap 12
fan-check a2 --surface p2 --power 4
)";

}  // namespace

TEST(Parse, Examples) {
  const Session a = parse_session("field rational\nmap a proj [Y*Z : X*Z : X*Y]\nanalyze a");
  EXPECT_EQ(a.maps.size(), 1u);
  EXPECT_EQ(a.commands.size(), 1u);
  EXPECT_TRUE(a.field->is_rational());

  const Session b = parse_session("map m monomial A=[[3,1],[-3,3]] lambda=(1,1)\nfirst-regular m --cap 12");
  const auto& mm = std::get<MonomialMap>(b.maps[0].data);
  EXPECT_EQ(mm.matrix(), IntMatrix2(3, 1, -3, 3));
  EXPECT_TRUE(mm.lambda()[0].is_one());
  EXPECT_EQ(b.commands[0].flags.at("cap"), "12");

  const Error e = catch_error([] { (void)parse_session("map bad proj [X : Y]"); });
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
}

TEST(Parse, AllKinds) {
  const Session s = parse_session(kCorpus);
  ASSERT_EQ(s.maps.size(), 7u);
  EXPECT_EQ(to_proj_map(s.find("s").data), M("Y*Z", "X*Z", "X*Y"));
  EXPECT_EQ(to_proj_map(s.find("e21").data), affine_map("x^2", "y^-2"));
  EXPECT_EQ(to_proj_map(s.find("t").data), affine_map("2*x + y^2", "3*y"));
  EXPECT_EQ(to_proj_map(s.find("k").data), affine_map("x^2", "x*y^2 + 1"));
  EXPECT_EQ(to_proj_map(s.find("m").data), affine_map("x^3*y", "x^-3*y^3"));
  EXPECT_EQ(s.commands.size(), 4u);
  EXPECT_EQ(s.commands[3].line, 13);
}

TEST(Parse, ExtensionField) {
  const Session s = parse_session("field ext minpoly t^2 - t + 1\nmap z affine (t*x, y + x^2)\n");
  EXPECT_EQ(s.field->degree(), 2);
  EXPECT_EQ(to_proj_map(s.maps[0].data).field()->degree(), 2);
}

TEST(Parse, Errors) {
  struct Case {
    const char* text;
    ErrorCode code;
    const char* where;
  };
  const Case cases[] = {
      {"map a proj [X : Y : W]", ErrorCode::UnknownVariable, "line 1, column 21"},
      {"map a proj [X : Y : Z]\nmap a proj [X : Y : Z]", ErrorCode::DuplicateName, "line 2, column 5"},
      {"analyze nope", ErrorCode::UndefinedName, "line 1, column 9"},
      {"map a proj [X : Y : Z]\nanalyze a\nfield rational", ErrorCode::SyntaxError, "line 3, column 1"},
      {"map a proj [X : Y : Z^2]", ErrorCode::DegreeMismatch, "line 1"},
      {"map a proj [X + : Y : Z]", ErrorCode::SyntaxError, "line 1, column 16"},
      {"map a warp [X : Y : Z]", ErrorCode::SyntaxError, "line 1, column 7"},
      {"map a proj [X : Y : Z]\niterate a", ErrorCode::SyntaxError, "line 2"},
      {"map a proj [X : Y : Z]\niterate a --n 0", ErrorCode::SyntaxError, "line 2, column 15"},
      {"map a proj [X : Y : Z]\nanalyze a --bogus 1", ErrorCode::SyntaxError, "line 2, column 11"},
      {"map a proj [X : Y : Z]\nfan-check a --surface p3", ErrorCode::SyntaxError, "line 2, column 23"},
      {"map m monomial A=[[1,2],[2,4]] lambda=(1,1)", ErrorCode::NotDominant, "line 1"},
      {"map m monomial A=[[1,0],[0,1]] lambda=(0,1)", ErrorCode::ZeroInput, "line 1"},
      {"map m monomial A=[[1,0],[0,1]]", ErrorCode::SyntaxError, "missing lambda="},
      {"map t triangular a=1 c=1 q=x", ErrorCode::UnknownVariable, "line 1, column 28"},
      {"map k skew phi=x^2 f=x", ErrorCode::DegreeMismatch, "line 1"},
      {"frobnicate a", ErrorCode::SyntaxError, "line 1, column 1"},
      {"field ext minpoly 2*t^2 + 1", ErrorCode::SyntaxError, "monic"},
  };
  for (const auto& c : cases) {
    const Error e = catch_error([&] { (void)parse_session(c.text); });
    EXPECT_EQ(e.code(), c.code) << c.text << " -> " << e.what();
    EXPECT_NE(std::string(e.what()).find(c.where), std::string::npos) << c.text << " -> " << e.what();
  }
}

TEST(Parse, RoundTrip) {
  const std::vector<std::string> corpus{
      kCorpus,
      "field ext minpoly t^4 - t^2 + 1\nmap z affine (t*x, y + x^2)\nmap w proj [(t - 1)*X^2 : t*Y^2 - 3/4*X*Z : Z^2]\n"
      "map q triangular a=t^3 c=2*t q=(1 - t)*y^3 + y\nmap r monomial A=[[1,1],[-1,1]] lambda=(t, -t^2)\n"
      "first-regular z --cap 20 --expect 6\n",
      "map f affine ((x^2 + 1)/(y - 2), -x/3)\nmap g skew phi=x^3 - x f=(x + 1)/(x^2 + 1)*y^2 - y/x\n"
      "degrees f --n 2\nclassify g\n",
  };
  for (const auto& text : corpus) {
    const Session a = parse_session(text);
    const std::string printed = to_string(a);
    const Session b = parse_session(printed);
    EXPECT_EQ(a, b) << printed;
    EXPECT_EQ(to_string(b), printed);
  }
}

TEST(Run, Examples) {
  const Session s = parse_session(kCorpus);
  const auto reports = run(s);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) EXPECT_TRUE(r.ok) << r.error_message;

  const Json& an = reports[0].result;
  EXPECT_EQ(an["regular"], false);
  EXPECT_EQ(an["dominant"], true);
  EXPECT_EQ(an["indeterminacy_points"], Json::parse(R"(["[1:0:0]","[0:1:0]","[0:0:1]"])"));

  const Json& fr = reports[1].result;
  EXPECT_EQ(fr["first_regular"], 2);
  EXPECT_EQ(fr["certificate"], "InIndexSet");
  std::vector<std::string> keys;
  for (const auto& [k, v] : fr.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"first_regular", "degree_sequence", "invertible", "dominant", "certificate",
                                            "indeterminacy_points"}));

  EXPECT_EQ(reports[2].result["first_regular"], 12);
  EXPECT_EQ(reports[2].result["degree_sequence"].back(), 2985984);
  EXPECT_EQ(reports[3].result["compatible"], true);
  EXPECT_EQ(exit_code(reports), kExitOk);
}

TEST(Run, ErrorIsolationAndExitCodes) {
  const Session s = parse_session(
      "map e21 affine (x^2, y^-2)\nmap d proj [X^2 : X*Y : X*Z]\n"
      "fan-check e21 --surface p2\nfirst-regular d\nanalyze e21\nclassify e21\n");
  const auto reports = run(s);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].error, ErrorCode::UnsupportedCommand);
  EXPECT_TRUE(reports[1].ok);  // [X^2 : X*Y : X*Z] reduces to the identity
  EXPECT_TRUE(reports[2].ok);
  EXPECT_EQ(reports[3].error, ErrorCode::UnsupportedCommand);
  EXPECT_EQ(exit_code(reports), kExitCommandError);
  const Json j = reports[0].to_json();
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["error"]["code"], "UnsupportedCommand");

  const auto nd = run(parse_session("map c proj [X : X : Z]\nfirst-regular c\nanalyze c\n"));
  EXPECT_EQ(nd[0].error, ErrorCode::NotDominant);
  EXPECT_TRUE(nd[1].ok);

  const auto gm = run(parse_session("map e21 affine (x^2, y^-2)\nfirst-regular e21 --expect 3\nanalyze e21\n"));
  EXPECT_EQ(gm[0].error, ErrorCode::GoldenMismatch);
  EXPECT_TRUE(gm[1].ok);
  EXPECT_EQ(exit_code(gm), kExitGoldenMismatch);

  const auto cap = run(parse_session("map h affine (y, y^2 + x)\ndegrees h --n 20\n"), RunOptions{12, 64, 24});
  EXPECT_EQ(cap[0].error, ErrorCode::DegreeCapExceeded);
}

TEST(Run, Deterministic) {
  const Session s = parse_session(kCorpus);
  EXPECT_EQ(format_json(run(s)), format_json(run(parse_session(kCorpus))));
  EXPECT_EQ(format_text(run(s)), format_text(run(s)));
}

TEST(Run, Classify) {
  const auto r = run(parse_session(
      "map m monomial A=[[3,1],[-3,3]] lambda=(1,1)\nmap t triangular a=2 c=3 q=y^2\nmap l affine (2*x, 3*y)\n"
      "classify m\nclassify t\nclassify l\n"));
  EXPECT_EQ(r[0].result["scalar_power"]["k"], 12);
  EXPECT_EQ(r[0].result["scalar_power"]["d"], 2985984);
  EXPECT_EQ(r[0].result["smallest_diagonal_power"], 6);
  EXPECT_TRUE(r[1].result["first_linear_iterate"].is_null());
  EXPECT_EQ(r[2].result["case"], "CaseB");
}

TEST(Json, BigIntegersAsStrings) {
  EXPECT_EQ(json_integer(std::int64_t{1} << 53), Json(std::int64_t{1} << 53));
  EXPECT_EQ(json_integer((std::int64_t{1} << 53) + 1), Json("9007199254740993"));
  EXPECT_EQ(json_integer(Integer("-1000000000000000000000000000000")), Json("-1000000000000000000000000000000"));
  EXPECT_EQ(json_integer(Integer(2985984)), Json(2985984));
}

TEST(Golden, BuiltinCorpus) {
  const VerifyReport r = verify_corpus(builtin_corpus());
  for (const auto& o : r.outcomes) EXPECT_TRUE(o.ok) << o.name << ": " << o.message;
  EXPECT_TRUE(r.all_ok);
  EXPECT_TRUE(r.index_set_witnessed);
  EXPECT_EQ(r.witnessed, (std::set<int>{1, 2, 3, 4, 6, 8, 12}));
  EXPECT_EQ(r.exit_code(), kExitOk);
  EXPECT_NO_THROW(require_all_ok(r));
}

TEST(Golden, PerturbedExpectationIsReported) {
  auto cases = builtin_corpus();
  for (auto& c : cases) {
    if (c.name == "monomial-order-12") c.expected_first_regular = 11;
  }
  const VerifyReport r = verify_corpus(cases);
  EXPECT_FALSE(r.all_ok);
  EXPECT_EQ(r.exit_code(), kExitGoldenMismatch);
  const Error e = catch_error([&] { require_all_ok(r); });
  EXPECT_EQ(e.code(), ErrorCode::GoldenMismatch);
  EXPECT_NE(std::string(e.what()).find("monomial-order-12"), std::string::npos);
}

TEST(Golden, ExtraCorpus) {
  EXPECT_TRUE(corpus_from_session(parse_session("")).empty());
  const auto extra = corpus_from_session(parse_session(
      "map q proj [X^2 : Y^2 : Z^2]\nmap s proj [Y*Z : X*Z : X*Y]\nfirst-regular q --expect 1\nanalyze s\n"
      "first-regular s --expect 2 --cap 3\n"));
  ASSERT_EQ(extra.size(), 2u);
  EXPECT_EQ(extra[1].cap, 3);
  EXPECT_TRUE(verify_corpus(extra).all_ok);
}

TEST(Golden, SemigroupLawOnCorpus) {
  for (const auto& gc : builtin_corpus()) {
    const ProjSelfMap phi = to_proj_map(gc.map);
    if (phi.degree() > 4) continue;
    const auto it = iterates(phi, 6);
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; m + n <= 6; ++n) {
        EXPECT_EQ(it[static_cast<std::size_t>(m + n - 1)],
                  compose(it[static_cast<std::size_t>(m - 1)], it[static_cast<std::size_t>(n - 1)]))
            << gc.name << " " << m << "+" << n;
      }
    }
  }
}
