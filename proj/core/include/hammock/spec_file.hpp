#pragma once

// Line-oriented input format. '#' starts a comment; braces, ';' and ':' are
// always separate tokens; semicolons are optional terminators.
//
//   category WEQ
//   mode table                      # or free-acyclic
//   object X
//   object Y
//   arrow w : X -> Y
//   comp g . f = h                  # table mode only
//   weq w
//   functor L { obj X => Y; obj Y => Y; arr w => id_Y; }
//   functor F : PT -> WEQ { ... }   # between two declared categories
//   nat ell : Id => L { at X : w; at Y : id_Y; }
//   cylinder A { obj CA i0 i0 i1 i1 p p }
//   lhomotopy H { cyl A f f g g via H }
//   monad T { functor L eta ell mu mu }
//   algebra alg { monad T obj Y act id_Y unit STRICT assoc STRICT }
//   idem I { functor L ell ell at X STRICT }
//
// Every object gets an identity id_<OBJ>, which is also a weak equivalence;
// identity composites are filled in. Payload blocks belong to the most
// recent category.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hammock/fincat.hpp"
#include "hammock/relcat.hpp"

namespace hammock {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  // Positions never take part in equality, so parse/serialize round trips
  // compare on content alone.
  bool operator==(const SourcePos&) const { return true; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

struct Named {
  std::string name;
  SourcePos pos;
  bool operator==(const Named&) const = default;
};

using Mapping = std::pair<Named, Named>;

struct ArrowDecl {
  Named name;
  Named source;
  Named target;
  bool operator==(const ArrowDecl&) const = default;
};

struct CompDecl {
  Named second;
  Named first;
  Named result;
  bool operator==(const CompDecl&) const = default;
};

struct FunctorDecl {
  Named name;
  std::optional<Named> source;  // categories; default: the enclosing one
  std::optional<Named> target;
  std::vector<Mapping> objects;
  std::vector<Mapping> arrows;
  bool operator==(const FunctorDecl&) const = default;
};

struct NatDecl {
  Named name;
  Named from;  // functor expression: Id, a name, or names joined by '.'
  Named to;
  std::vector<Mapping> components;
  bool operator==(const NatDecl&) const = default;
};

struct CylinderDecl {
  Named base;
  Named cylinder;
  Named i0;
  Named i1;
  Named p;
  bool operator==(const CylinderDecl&) const = default;
};

struct HomotopyDecl {
  Named name;
  Named base;  // cylinder
  Named f;
  Named g;
  Named via;
  bool operator==(const HomotopyDecl&) const = default;
};

struct MonadDecl {
  Named name;
  Named functor;
  Named eta;
  Named mu;
  bool operator==(const MonadDecl&) const = default;
};

struct AlgebraDecl {
  Named name;
  Named monad;
  Named object;
  Named action;
  Named unit;  // STRICT or a homotopy
  Named assoc;
  bool operator==(const AlgebraDecl&) const = default;
};

struct IdemDecl {
  Named name;
  Named functor;
  Named ell;
  std::vector<Mapping> witnesses;  // object -> STRICT or a homotopy
  bool operator==(const IdemDecl&) const = default;
};

enum class CategoryMode { table, free_acyclic };

struct CategoryDecl {
  Named name;
  CategoryMode mode = CategoryMode::table;
  std::vector<Named> objects;
  std::vector<ArrowDecl> arrows;
  std::vector<CompDecl> comps;
  std::vector<Named> weqs;
  std::vector<FunctorDecl> functors;
  std::vector<NatDecl> nats;
  std::vector<CylinderDecl> cylinders;
  std::vector<HomotopyDecl> homotopies;
  std::vector<MonadDecl> monads;
  std::vector<AlgebraDecl> algebras;
  std::vector<IdemDecl> idems;
  bool operator==(const CategoryDecl&) const = default;
};

struct SpecFile {
  std::vector<CategoryDecl> categories;
  bool operator==(const SpecFile&) const = default;
};

/// Throws ParseError with the position of the offending token.
SpecFile parse_spec(std::string_view text);
/// Canonical text; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const SpecFile& s);

/// Table-mode declaration of a category with weak equivalences. Identities
/// must be named id_<OBJ>.
CategoryDecl to_decl(const RelCat& r);

/// A parsed file with every name resolved. Categories and their weak
/// equivalences are validated; payload laws (functoriality, naturality,
/// homotopy equations) are left to the checks that use them.
struct Model {
  std::vector<std::string> order;  // category names as declared
  std::map<std::string, std::shared_ptr<const RelCat>> categories;
  std::map<std::string, FunctorData> functors;
  std::map<std::string, NatTransData> nats;
  std::map<std::string, std::map<std::string, CylinderData>> cylinders;  // category -> base object
  std::map<std::string, LeftHomotopyData> homotopies;
  std::map<std::string, std::string> homotopy_category;
  std::map<std::string, MonadData> monads;
  std::map<std::string, std::string> monad_category;
  std::map<std::string, HoAlgebraData> algebras;
  std::map<std::string, std::string> algebra_category;
  std::map<std::string, IdempotentData> idems;
  std::map<std::string, std::string> idem_category;

  /// The first declared category.
  const std::shared_ptr<const RelCat>& primary() const;
  const std::shared_ptr<const RelCat>& category(const std::string& name) const;
};

/// Throws ParseError for unknown identifiers and ValidationError for
/// categories that violate their laws.
Model load_model(const SpecFile& s);
Model load_model_text(std::string_view text);
Model load_model_file(const std::string& path);

}  // namespace hammock
