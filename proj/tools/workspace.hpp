#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grpdlim/cohomology.hpp"
#include "grpdlim/models.hpp"
#include "grpdlim/site.hpp"

// Named declarations read from the text format. A declaration keeps its
// normalized token lines next to the value they elaborate to, so printing
// is canonical and parse(print(ws)) reproduces the workspace.
namespace grpdlim::cli {

enum class ExitCode : int {
  Ok = 0,
  Other = 1,
  Usage = 2,
  Syntax = 3,
  Unresolved = 4,
  Validation = 5,
  KindMismatch = 6,
  Budget = 7
};

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

class CliError : public Error {
 public:
  CliError(ExitCode code, Location where, const std::string& message);
  ExitCode code() const { return code_; }
  const Location& where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  ExitCode code_;
  Location where_;
  std::string message_;
};

enum class Kind {
  Group,
  Category,
  Groupoid,
  Functor,
  Diagram,
  Action,       // a finite group acting on a groupoid
  GroupAction,  // a finite group acting on a finite group
  Site,
  Presheaf,
  PresheafMap
};

const char* to_string(Kind k);
std::optional<Kind> kind_from_string(std::string_view s);

struct Names {
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
  ObjectIndex object(std::string_view name) const;
  MorphismIndex morphism(std::string_view name) const;
};

/// Objects "0".."n-1"; identity of x is "id_x"; other morphisms "x_y" when
/// the category is thin and "m<k>" otherwise.
Names default_names(const FiniteCategory& c);

struct GroupValue {
  FiniteGroup group;
  std::vector<std::string> elements;
  ElementIndex element(std::string_view name) const;
};

struct CategoryValue {
  FiniteCategory category;
  std::optional<Groupoid> groupoid;  // set for groupoid declarations
  Names names;
  /// Declaration names of the factors when declared as `product A B`.
  std::optional<std::pair<std::string, std::string>> product_of;
};

struct FunctorValue {
  CatFunctor functor;
  std::string source;
  std::string target;
};

struct DiagramValue {
  DiagramFunctor diagram;
  std::string index;
};

struct ActionValue {
  GroupAction action;
  std::string group;
  std::string space;
};

struct GroupActionValue {
  ActionOnGroup action;
  std::string gamma;
  std::string group;
};

struct SiteValue {
  FiniteSite site;
  std::string shape;
};

struct PresheafValue {
  SitePresheaf presheaf;
  std::string site;
};

struct PresheafMapValue {
  PresheafMap map;
  std::string source;
  std::string target;
};

using Value = std::variant<GroupValue, CategoryValue, FunctorValue, DiagramValue, ActionValue,
                           GroupActionValue, SiteValue, PresheafValue, PresheafMapValue>;

using Line = std::vector<std::string>;

struct Declaration {
  Kind kind;
  std::string name;
  Line header;  // tokens between the name and the opening brace
  std::vector<Line> body;
  Location where;
  Value value;
};

class Workspace {
 public:
  const std::vector<Declaration>& declarations() const { return decls_; }
  const Declaration* find(std::string_view name) const;
  /// Throws Unresolved when missing and KindMismatch when the kind is not
  /// one of `kinds`.
  const Declaration& get(std::string_view name, std::initializer_list<Kind> kinds,
                         Location where = {}) const;

  const GroupValue& group(std::string_view name, Location where = {}) const;
  /// Category or groupoid declarations.
  const CategoryValue& category(std::string_view name, Location where = {}) const;
  const CategoryValue& groupoid(std::string_view name, Location where = {}) const;
  const FunctorValue& functor(std::string_view name, Location where = {}) const;
  const DiagramValue& diagram(std::string_view name, Location where = {}) const;
  const ActionValue& action(std::string_view name, Location where = {}) const;
  const GroupActionValue& group_action(std::string_view name, Location where = {}) const;
  const SiteValue& site(std::string_view name, Location where = {}) const;
  const PresheafValue& presheaf(std::string_view name, Location where = {}) const;
  const PresheafMapValue& presheaf_map(std::string_view name, Location where = {}) const;

  /// Elaborates tokens against the declarations so far and appends.
  void declare(Kind kind, std::string name, Line header, std::vector<Line> body,
               Location where = {});

  /// Same tokens and equal values, declaration by declaration.
  friend bool operator==(const Workspace& a, const Workspace& b);
  friend Workspace parse(std::string_view text);

 private:
  void push(Declaration d);

  std::vector<Declaration> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

Workspace parse(std::string_view text);
std::string print(const Workspace& ws);

// Explicit-form declarations built from values, for generated corpora.
// Each returns the declared name.
std::string declare_group(Workspace& ws, const std::string& name, const FiniteGroup& g);
std::string declare_groupoid(Workspace& ws, const std::string& name, const Groupoid& g);
std::string declare_category(Workspace& ws, const std::string& name, const FiniteCategory& c);
std::string declare_functor(Workspace& ws, const std::string& name, const std::string& source,
                            const std::string& target, const CatFunctor& f);
/// Declares the vertices and edges as `<name>_v<k>` / `<name>_e<k>`.
std::string declare_diagram(Workspace& ws, const std::string& name, const std::string& index,
                            const DiagramFunctor& d);

}  // namespace grpdlim::cli
