#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "tcat/category.hpp"
#include "tcat/cocones.hpp"
#include "tcat/grothendieck.hpp"
#include "tcat/marking.hpp"

namespace tcat {

inline constexpr int kSchemaVersion = 1;

enum class DocumentKind { two_category, category, functor, cat_valued_functor, cocone };
const char* to_string(DocumentKind kind);

struct CoconeDocument {
  CatValuedFunctor functor;
  CatCocone cocone;
};

struct Document {
  int schema = kSchemaVersion;
  DocumentKind kind = DocumentKind::two_category;
  std::string name;
  std::variant<MarkedTwoCategory, FiniteCategory, MarkedFunctor, CatValuedFunctor, CoconeDocument>
      payload;
};

Document make_document(std::string name, MarkedTwoCategory c);
Document make_document(std::string name, FiniteCategory c);
Document make_document(MarkedFunctor f);
Document make_document(std::string name, CatValuedFunctor f);
Document make_document(std::string name, CatValuedFunctor f, CatCocone cocone);

/// Cells are referenced by name, so names must be unique per kind of cell.
/// Syntax errors carry a line; schema errors carry a path such as
/// /one_cells/2/source. The payload is validated before it is returned.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Canonical form: two-space indentation, cells in id order, identity cells
/// and unit-law table entries left implicit.
std::string serialize(const Document& doc);

/// Bundled fixtures by name.
std::vector<std::string> fixture_names();
Document fixture_document(const std::string& name);

}  // namespace tcat
