#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/bifurcation.hpp"
#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"

namespace pdnf {

/// Parsed field file.  See docs/field-format.md for the grammar.
struct FieldFile {
  std::vector<std::string> vars;
  PolyVectorField field;
  /// No `order` line: the terms are an exact polynomial and may be retagged
  /// to any order.
  bool exact = true;
  /// Conjugation matrix M: analyses run on the field in y = M x.
  std::optional<Matrix> linear_matrix;

  std::size_t dim() const { return field.dim(); }

  /// The field at truncation order `order`, conjugated by linear_matrix
  /// when present.  Throws order_exceeds_input for a truncated file whose
  /// order is below the request.
  PolyVectorField prepared(int order) const;

  friend bool operator==(const FieldFile& a, const FieldFile& b) {
    return a.vars == b.vars && a.field == b.field && a.exact == b.exact && a.linear_matrix == b.linear_matrix;
  }
};

FieldFile parse_field_file(std::string_view text);
std::string serialize_field_file(const FieldFile& file);

/// Wraps a field for serialization with default variable names.
FieldFile make_field_file(const PolyVectorField& f, bool exact = false);

ParamFamily parse_family_file(std::string_view text);
std::string serialize_family_file(const ParamFamily& family);

/// Whole-file helpers; io_error on unreadable paths.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pdnf
