#pragma once

// Named registry of inputs loaded from JSON, falling back to the built-in
// fixtures for names the file does not define.
//
// File layout (every section optional):
//   categories:    {name: {objects, morphisms: [{id, dom, cod}], composition: [{g, f, eq}]}}
//   groups:        {name: {elements, unit, table}}            table of element names
//   functors:      {name: {source, target, objects: {..}, morphisms: {..}}}
//   diagrams:      {name: {category, values: {obj: [{label, group}]},
//                          actions: {mor: {label: {element: [letter, ..]}}}}}
//   dsets:         {name: {category, sets: {obj: [..]}, maps: {mor: {x: y}}}}
//   presentations: {name: {generators, relators: [[letter, ..]]}}   "a!" is a^-1
// Groups are looked up in the file first, then in the catalog ("Z2", "S3", ...).

#include <map>
#include <string>
#include <vector>

#include "hocofin/report.hpp"

namespace hocofin {

class Workspace {
 public:
  Workspace() = default;
  /// Builds and validates everything; the first failure propagates with its
  /// code (MissingComposite, FunctorViolation, UnknownObject, ...).
  static Workspace from_json(const Json& j);
  /// InvalidInput when the file cannot be read or is not JSON.
  static Workspace load(const std::string& path);

  FinCat category(const std::string& name) const;
  FinGroup group(const std::string& name) const;
  Functor functor(const std::string& name) const;
  GroupDiagram diagram(const std::string& name) const;
  DSet dset(const std::string& name) const;
  /// File presentations, then presentations of catalog groups, then
  /// "colim0:<diagram>".
  GroupPresentation presentation(const std::string& name) const;
  /// "point", "circle", "nerve:<category>", "B:<group>", "hocolim:<pointed diagram>".
  TruncSSet sset(const std::string& name, std::size_t level) const;

  /// Names defined by the file, per section.
  Json summary() const;

 private:
  std::map<std::string, FinCat> categories_;
  std::map<std::string, FinGroup> groups_;
  std::map<std::string, Functor> functors_;
  std::map<std::string, GroupDiagram> diagrams_;
  std::map<std::string, DSet> dsets_;
  std::map<std::string, GroupPresentation> presentations_;
};

}  // namespace hocofin
