#pragma once

// JSON forms of the library's values. Every array is emitted in canonical
// order so identical values always serialise to identical bytes.

#include <json.hpp>

#include "antichain.hpp"
#include "direction.hpp"
#include "long_line.hpp"
#include "pipe.hpp"
#include "preorder.hpp"

namespace longray {

using Json = nlohmann::ordered_json;

/// [1,3]
inline Json to_json(SubsetMask s) { return Json(s.indices()); }

/// [[1],[2,3]]
inline Json to_json(const Antichain& a) {
  Json out = Json::array();
  for (auto s : a.elements()) out.push_back(to_json(s));
  return out;
}

inline Json to_json(const UpSet& u) {
  Json out = Json::array();
  for (auto s : u.members()) out.push_back(to_json(s));
  return out;
}

/// ["+1","-2"]
inline Json to_json(SignedSubset s) {
  Json out = Json::array();
  for (int a : s.atoms()) out.push_back(signed_atom_string(a));
  return out;
}

inline Json to_json(const SignedAntichain& a) {
  Json out = Json::array();
  for (auto s : a.elements()) out.push_back(to_json(s));
  return out;
}

/// {"tag":"bounded"} | {"tag":"plus","antichain":[...]} | {"tag":"minus",...}
inline Json to_json(const ClassIntoL& c) {
  Json out;
  switch (c.tag()) {
    case ClassIntoL::Tag::Bounded: out["tag"] = "bounded"; return out;
    case ClassIntoL::Tag::Plus: out["tag"] = "plus"; break;
    case ClassIntoL::Tag::Minus: out["tag"] = "minus"; break;
  }
  out["antichain"] = to_json(c.antichain());
  return out;
}

/// {"n":n,"rows":[{"I":[..],"J":[..] or null},...]}
inline Json to_json(const DirectionMatrix& d) {
  Json rows = Json::array();
  for (auto row : d.index_order()) {
    Json r;
    r["I"] = to_json(row);
    const auto target = d.target(row);
    r["J"] = target ? to_json(*target) : Json(nullptr);
    rows.push_back(std::move(r));
  }
  Json out;
  out["n"] = d.dimension();
  out["rows"] = std::move(rows);
  return out;
}

/// [[i,j],...] over the related pairs.
inline Json to_json(const FinitePreorder& p) {
  Json out = Json::array();
  for (auto [i, j] : p.pairs()) out.push_back(Json::array({i, j}));
  return out;
}

/// {"k":k,"order":[[i,j]...],"classes":count}
inline Json pipe_json(const PipeCode& s) {
  Json out;
  out["k"] = s.length();
  out["order"] = to_json(pipe_preorder(s));
  out["classes"] = count_pipe_classes(s);
  return out;
}

/// Parses the [[1],[2,3]] form back into an antichain.
inline Antichain antichain_from_json(int n, const Json& j) {
  if (!j.is_array()) throw InvalidInput("antichain JSON must be an array");
  std::vector<SubsetMask> elements;
  for (const auto& member : j) {
    if (!member.is_array()) throw InvalidInput("antichain member must be an array of indices");
    std::vector<int> indices;
    for (const auto& i : member) {
      if (!i.is_number_integer()) throw InvalidInput("subset indices must be integers");
      indices.push_back(i.get<int>());
    }
    elements.push_back(SubsetMask::of(indices));
  }
  return Antichain(n, std::move(elements));
}

}  // namespace longray
