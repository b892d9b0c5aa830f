#include "evreg/session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <regex>
#include <set>

#include "evreg/error.hpp"
#include "evreg/expr.hpp"

namespace evreg {

namespace {

constexpr std::string_view kXYZ[] = {"X", "Y", "Z"};
constexpr std::string_view kXY[] = {"x", "y"};
constexpr std::string_view kX[] = {"x"};
constexpr std::string_view kY[] = {"y"};

struct FlagSpec {
  std::string_view name;
  bool required;
  bool integer;
};

const std::map<std::string_view, std::vector<FlagSpec>>& command_specs() {
  static const std::map<std::string_view, std::vector<FlagSpec>> specs{
      {"analyze", {}},
      {"iterate", {{"n", true, true}}},
      {"first-regular", {{"cap", false, true}, {"expect", false, true}}},
      {"degrees", {{"n", true, true}}},
      {"fan-check", {{"surface", true, false}, {"power", false, true}, {"cap", false, true}}},
      {"classify", {}},
  };
  return specs;
}

std::string located(int line, int column, const std::string& msg) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}

[[noreturn]] void syntax_error(int line, int column, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError, located(line, column, msg));
}

// Strips the "Code: " prefix that Error adds to what().
std::string bare_message(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Re-raises errors from value constructors with a source position.
template <typename F>
auto at_position(int line, int column, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string msg = bare_message(e);
    if (msg.rfind("line ", 0) == 0) throw;
    throw Error(e.code(), located(line, column, msg));
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// A piece of one source line together with the column of its first character.
struct Piece {
  std::string_view text;
  int column = 1;
};

Piece trim(Piece p) {
  std::size_t b = 0;
  while (b < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
  std::size_t e = p.text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
  return {p.text.substr(b, e - b), p.column + static_cast<int>(b)};
}

// Next whitespace-delimited word; p is advanced past it.
Piece next_word(Piece& p) {
  p = trim(p);
  std::size_t e = 0;
  while (e < p.text.size() && !std::isspace(static_cast<unsigned char>(p.text[e]))) ++e;
  const Piece w{p.text.substr(0, e), p.column};
  p = {p.text.substr(e), p.column + static_cast<int>(e)};
  return w;
}

// Splits at separator characters outside brackets.
std::vector<Piece> split_top(Piece p, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.text.size(); ++i) {
    const char c = p.text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim({p.text.substr(start, i - start), p.column + static_cast<int>(start)}));
      start = i + 1;
    }
  }
  out.push_back(trim({p.text.substr(start), p.column + static_cast<int>(start)}));
  return out;
}

// "(...)" or "[...]" spanning the whole piece; returns the inside.
Piece unwrap(Piece p, char open, char close, int line, const char* what) {
  p = trim(p);
  if (p.text.size() < 2 || p.text.front() != open || p.text.back() != close) {
    syntax_error(line, p.column, std::string("expected ") + what + " enclosed in " + open + close);
  }
  int depth = 0;
  for (std::size_t i = 0; i + 1 < p.text.size(); ++i) {
    if (p.text[i] == open) ++depth;
    if (p.text[i] == close && --depth == 0) syntax_error(line, p.column + static_cast<int>(i), "unbalanced brackets");
  }
  return {p.text.substr(1, p.text.size() - 2), p.column + 1};
}

// key=value pairs; a value runs until the next " key=" outside brackets.
std::map<std::string, Piece> key_values(Piece p, int line, std::initializer_list<std::string_view> keys) {
  static const std::regex kKey(R"(^([A-Za-z_][A-Za-z0-9_]*)=)");
  std::map<std::string, Piece> out;
  p = trim(p);
  std::vector<std::pair<std::size_t, std::size_t>> starts;  // (key start, value start)
  int depth = 0;
  for (std::size_t i = 0; i < p.text.size(); ++i) {
    const char c = p.text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth != 0) continue;
    if (i != 0 && !std::isspace(static_cast<unsigned char>(p.text[i - 1]))) continue;
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(p.text.begin() + static_cast<std::ptrdiff_t>(i), p.text.end(), m, kKey)) {
      starts.emplace_back(i, i + static_cast<std::size_t>(m.length(0)));
    }
  }
  if (starts.empty() || starts.front().first != 0) syntax_error(line, p.column, "expected key=value");
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const auto [ks, vs] = starts[k];
    const std::size_t ve = k + 1 < starts.size() ? starts[k + 1].first : p.text.size();
    const std::string key(p.text.substr(ks, vs - ks - 1));
    const int col = p.column + static_cast<int>(ks);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) syntax_error(line, col, "unexpected key '" + key + "'");
    const Piece value = trim({p.text.substr(vs, ve - vs), p.column + static_cast<int>(vs)});
    if (value.text.empty()) syntax_error(line, col, "empty value for '" + key + "'");
    if (!out.emplace(key, value).second) syntax_error(line, col, "duplicate key '" + key + "'");
  }
  for (const auto key : keys) {
    if (!out.contains(std::string(key))) syntax_error(line, p.column, "missing " + std::string(key) + "=");
  }
  return out;
}

SourcePos pos_of(int line, const Piece& p) { return SourcePos{line, p.column}; }

MapData parse_proj(Piece rest, int line, const FieldPtr& k) {
  const std::vector<Piece> parts = split_top(unwrap(rest, '[', ']', line, "forms"), ':');
  if (parts.size() != 3) {
    syntax_error(line, rest.column, "expected three forms separated by ':', got " + std::to_string(parts.size()));
  }
  std::vector<MPoly> f;
  for (const auto& p : parts) f.push_back(parse_polynomial(p.text, k, kXYZ, pos_of(line, p)));
  return at_position(line, rest.column, [&] { return MapData(ProjDef{HomogeneousTriple(f[0], f[1], f[2])}); });
}

MapData parse_affine(Piece rest, int line, const FieldPtr& k) {
  const std::vector<Piece> parts = split_top(unwrap(rest, '(', ')', line, "pair"), ',');
  if (parts.size() != 2) {
    syntax_error(line, rest.column, "expected two components separated by ',', got " + std::to_string(parts.size()));
  }
  return AffineDef{parse_rational_function(parts[0].text, k, kXY, pos_of(line, parts[0])),
                   parse_rational_function(parts[1].text, k, kXY, pos_of(line, parts[1]))};
}

Integer parse_integer(Piece p, int line) {
  static const std::regex kInt(R"(^[+-]?[0-9]+$)");
  const std::string s(p.text);
  if (!std::regex_match(s, kInt)) syntax_error(line, p.column, "expected an integer, got '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

MapData parse_monomial(Piece rest, int line, const FieldPtr& k) {
  auto kv = key_values(rest, line, {"A", "lambda"});
  const Piece a = kv.at("A");
  const std::vector<Piece> rows = split_top(unwrap(a, '[', ']', line, "matrix"), ',');
  if (rows.size() != 2) syntax_error(line, a.column, "expected a 2x2 matrix");
  std::vector<Integer> e;
  for (const auto& r : rows) {
    const std::vector<Piece> cells = split_top(unwrap(r, '[', ']', line, "row"), ',');
    if (cells.size() != 2) syntax_error(line, r.column, "expected a 2x2 matrix");
    for (const auto& c : cells) e.push_back(parse_integer(c, line));
  }
  const Piece l = kv.at("lambda");
  const std::vector<Piece> ls = split_top(unwrap(l, '(', ')', line, "pair"), ',');
  if (ls.size() != 2) syntax_error(line, l.column, "lambda takes two entries");
  const FieldElement l1 = parse_scalar(ls[0].text, k, pos_of(line, ls[0]));
  const FieldElement l2 = parse_scalar(ls[1].text, k, pos_of(line, ls[1]));
  return at_position(line, a.column, [&] { return MapData(MonomialMap(IntMatrix2(e[0], e[1], e[2], e[3]), l1, l2)); });
}

MapData parse_triangular(Piece rest, int line, const FieldPtr& k) {
  auto kv = key_values(rest, line, {"a", "c", "q"});
  const FieldElement a = parse_scalar(kv.at("a").text, k, pos_of(line, kv.at("a")));
  const FieldElement c = parse_scalar(kv.at("c").text, k, pos_of(line, kv.at("c")));
  const MPoly q = parse_polynomial(kv.at("q").text, k, kY, pos_of(line, kv.at("q")));
  return at_position(line, rest.column, [&] { return MapData(TriangularMap(a, c, q)); });
}

MapData parse_skew(Piece rest, int line, const FieldPtr& k) {
  auto kv = key_values(rest, line, {"phi", "f"});
  const MPoly phi = parse_polynomial(kv.at("phi").text, k, kX, pos_of(line, kv.at("phi")));
  const RationalFunction f = parse_rational_function(kv.at("f").text, k, kXY, pos_of(line, kv.at("f")));
  return at_position(line, kv.at("f").column, [&] { return MapData(SkewMap::from_pair(phi, f)); });
}

Command parse_command(Piece verb, Piece rest, int line, const Session& s) {
  const auto& specs = command_specs();
  const auto spec = specs.find(verb.text);
  if (spec == specs.end()) syntax_error(line, verb.column, "unknown command '" + std::string(verb.text) + "'");
  Command cmd;
  cmd.verb = std::string(verb.text);
  cmd.line = line;
  int target_column = verb.column;
  for (;;) {
    const Piece w = next_word(rest);
    if (w.text.empty()) break;
    if (w.text.starts_with("--")) {
      const std::string flag(w.text.substr(2));
      const auto fs = std::find_if(spec->second.begin(), spec->second.end(),
                                   [&](const FlagSpec& f) { return f.name == flag; });
      if (fs == spec->second.end()) {
        syntax_error(line, w.column, "unknown flag '" + std::string(w.text) + "' for " + cmd.verb);
      }
      const Piece v = next_word(rest);
      if (v.text.empty()) syntax_error(line, w.column, "flag " + std::string(w.text) + " needs a value");
      if (fs->integer) {
        int value = 0;
        const auto [end, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), value);
        if (ec != std::errc() || end != v.text.data() + v.text.size() || value < 1) {
          syntax_error(line, v.column, "flag " + std::string(w.text) + " expects a positive integer");
        }
      } else {
        at_position(line, v.column, [&] { return Fan::for_surface(v.text); });
      }
      if (!cmd.flags.emplace(flag, std::string(v.text)).second) {
        syntax_error(line, w.column, "duplicate flag " + std::string(w.text));
      }
      continue;
    }
    if (!cmd.target.empty()) syntax_error(line, w.column, "unexpected '" + std::string(w.text) + "'");
    if (!is_identifier(w.text)) syntax_error(line, w.column, "expected a map name");
    cmd.target = std::string(w.text);
    target_column = w.column;
  }
  if (cmd.target.empty()) syntax_error(line, verb.column, cmd.verb + " needs a map name");
  for (const auto& f : spec->second) {
    if (f.required && !cmd.flags.contains(std::string(f.name))) {
      syntax_error(line, verb.column, cmd.verb + " needs --" + std::string(f.name));
    }
  }
  at_position(line, target_column, [&] { return &s.find(cmd.target); });
  return cmd;
}

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view kind_name(const MapData& data) {
  static constexpr std::string_view kNames[] = {"proj", "affine", "monomial", "triangular", "skew"};
  return kNames[data.index()];
}

const MapDef& Session::find(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m;
  }
  throw Error(ErrorCode::UndefinedName, "no map named '" + std::string(name) + "'");
}

bool operator==(const Session& a, const Session& b) {
  return same_field(a.field, b.field) && a.maps == b.maps && a.commands == b.commands;
}

Session parse_session(std::string_view text) {
  Session s;
  bool field_seen = false;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Piece rest{raw, 1};
    const Piece head = next_word(rest);
    if (head.text.empty()) continue;

    if (head.text == "field") {
      if (field_seen) syntax_error(line, head.column, "second field declaration");
      if (!s.maps.empty() || !s.commands.empty()) {
        syntax_error(line, head.column, "field declaration must precede maps and commands");
      }
      field_seen = true;
      const Piece kind = next_word(rest);
      if (kind.text == "rational") {
        if (!trim(rest).text.empty()) syntax_error(line, trim(rest).column, "unexpected text after 'rational'");
        s.field = NumberField::rationals();
      } else if (kind.text == "ext") {
        const Piece mp = next_word(rest);
        if (mp.text != "minpoly") syntax_error(line, mp.column, "expected 'minpoly'");
        const Piece poly = trim(rest);
        s.field = parse_minpoly(poly.text, pos_of(line, poly));
      } else {
        syntax_error(line, kind.column, "expected 'rational' or 'ext'");
      }
      continue;
    }

    if (!s.field) s.field = NumberField::rationals();
    field_seen = true;

    if (head.text == "map") {
      const Piece name = next_word(rest);
      if (!is_identifier(name.text)) syntax_error(line, name.column, "expected a map name");
      for (const auto& m : s.maps) {
        if (m.name == name.text) {
          throw Error(ErrorCode::DuplicateName,
                      located(line, name.column, "map '" + std::string(name.text) + "' already defined on line " +
                                                     std::to_string(m.line)));
        }
      }
      const Piece kind = next_word(rest);
      MapData data = [&]() -> MapData {
        if (kind.text == "proj") return parse_proj(rest, line, s.field);
        if (kind.text == "affine") return parse_affine(rest, line, s.field);
        if (kind.text == "monomial") return parse_monomial(rest, line, s.field);
        if (kind.text == "triangular") return parse_triangular(rest, line, s.field);
        if (kind.text == "skew") return parse_skew(rest, line, s.field);
        syntax_error(line, kind.column, "unknown map kind '" + std::string(kind.text) +
                                            "' (expected proj, affine, monomial, triangular or skew)");
      }();
      s.maps.push_back(MapDef{std::string(name.text), std::move(data), line});
      continue;
    }

    s.commands.push_back(parse_command(head, rest, line, s));
  }
  if (!s.field) s.field = NumberField::rationals();
  return s;
}

std::string Command::to_string() const {
  std::string out = verb + " " + target;
  for (const auto& [k, v] : flags) out += " --" + k + " " + v;
  return out;
}

std::string to_string(const MapDef& m) {
  const std::string head = "map " + m.name + " " + std::string(kind_name(m.data)) + " ";
  return head + std::visit(Overloaded{
                               [](const ProjDef& p) {
                                 return "[" + p.forms[0].to_string(kXYZ) + " : " + p.forms[1].to_string(kXYZ) + " : " +
                                        p.forms[2].to_string(kXYZ) + "]";
                               },
                               [](const AffineDef& a) { return "(" + a.f.to_string(kXY) + ", " + a.g.to_string(kXY) + ")"; },
                               [](const MonomialMap& mm) {
                                 const IntMatrix2& a = mm.matrix();
                                 return "A=" + a.to_string() + " lambda=(" + mm.lambda()[0].to_string() + "," +
                                        mm.lambda()[1].to_string() + ")";
                               },
                               [](const TriangularMap& t) {
                                 return "a=" + t.a().to_string() + " c=" + t.c().to_string() + " q=" + t.q().to_string(kY);
                               },
                               [](const SkewMap& sk) {
                                 return "phi=" + sk.phi().to_string(kX) + " f=" + sk.fiber_function().to_string(kXY);
                               },
                           },
                           m.data);
}

std::string to_string(const Session& s) {
  std::string out = "field " + s.field->declaration() + "\n";
  for (const auto& m : s.maps) out += to_string(m) + "\n";
  for (const auto& c : s.commands) out += c.to_string() + "\n";
  return out;
}

ProjSelfMap to_proj_map(const MapData& data) {
  return std::visit(Overloaded{
                        [](const ProjDef& p) { return ProjSelfMap::normalize(p.forms); },
                        [](const AffineDef& a) { return ProjSelfMap::normalize(homogenize_affine_pair(a.f, a.g)); },
                        [](const MonomialMap& m) { return to_proj_map(m); },
                        [](const TriangularMap& t) {
                          const FieldPtr& k = t.field();
                          const MPoly x = MPoly::variable(k, 2, 0);
                          const MPoly y = MPoly::variable(k, 2, 1);
                          const MPoly ys[] = {y};
                          return ProjSelfMap::normalize(homogenize_affine_pair(
                              RationalFunction(x.scaled(t.a()) + t.q().compose(ys)), RationalFunction(y.scaled(t.c()))));
                        },
                        [](const SkewMap& sk) {
                          const MPoly xs[] = {MPoly::variable(sk.field(), 2, 0)};
                          return ProjSelfMap::normalize(
                              homogenize_affine_pair(RationalFunction(sk.phi().compose(xs)), sk.fiber_function()));
                        },
                    },
                    data);
}

}  // namespace evreg
