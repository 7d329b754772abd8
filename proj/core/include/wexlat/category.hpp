#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wexlat/quiver.hpp"

namespace wexlat {

/// A loaded category file: base field, quiver, and the named indecomposable
/// representations. `metadata_json` carries the file's free-form metadata
/// object verbatim (compact JSON, "{}" when absent).
struct Category {
  PrimeField field;
  QuiverPtr quiver;
  std::vector<Representation> indecs;
  std::vector<std::string> names;
  std::string metadata_json = "{}";
};

/// The interval representations of a type-A_n quiver, named "[i,j]".
Category type_a(int n, const std::string& orientation, Scalar p);

/// Parse and validate a category file. Matrix entries are arbitrary
/// integers, reduced mod p on load; `override_field` reinterprets the same
/// data over another prime (used by the field-stability check). Throws
/// std::invalid_argument with a description of the first problem found.
Category parse_category(const std::string& json_text, std::optional<Scalar> override_field = {});

/// Deterministic serialization (2-space indent, fixed key order).
std::string category_to_json(const Category& cat);

}  // namespace wexlat
