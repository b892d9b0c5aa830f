#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evreg/monomial.hpp"
#include "evreg/mpoly.hpp"
#include "evreg/projmap.hpp"
#include "evreg/skewprod.hpp"

namespace evreg {

struct ProjDef {
  HomogeneousTriple forms;
  friend bool operator==(const ProjDef&, const ProjDef&) = default;
};

// (x, y) -> (f, g).
struct AffineDef {
  RationalFunction f;
  RationalFunction g;
  friend bool operator==(const AffineDef&, const AffineDef&) = default;
};

using MapData = std::variant<ProjDef, AffineDef, MonomialMap, TriangularMap, SkewMap>;

std::string_view kind_name(const MapData& data);

struct MapDef {
  std::string name;
  MapData data;
  int line = 0;

  // Equality ignores source positions.
  friend bool operator==(const MapDef& a, const MapDef& b) { return a.name == b.name && a.data == b.data; }
};

struct Command {
  std::string verb;
  std::string target;
  std::map<std::string, std::string> flags;
  int line = 0;

  friend bool operator==(const Command& a, const Command& b) {
    return a.verb == b.verb && a.target == b.target && a.flags == b.flags;
  }
  std::string to_string() const;
};

struct Session {
  FieldPtr field;
  std::vector<MapDef> maps;
  std::vector<Command> commands;

  const MapDef& find(std::string_view name) const;  // throws UndefinedName
  friend bool operator==(const Session& a, const Session& b);
};

// Line-oriented; '#' starts a comment. Throws SyntaxError, UnknownVariable,
// DuplicateName or UndefinedName with "line L, column C" in the message.
Session parse_session(std::string_view text);

// Re-parses to an equal Session.
std::string to_string(const Session& s);
std::string to_string(const MapDef& m);

// Every kind becomes a rational self-map of P^2 through its affine chart.
ProjSelfMap to_proj_map(const MapData& data);

}  // namespace evreg
