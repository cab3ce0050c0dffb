#pragma once

// Text formats and JSON encodings.
//
// Point sets:  first line "n k" (dimension, number of points), then k lines
//              of n characters from {0,1}.
// Trees:       first line is the vertex count, then one "u v" edge per line.
// Blank lines and lines starting with '#' are ignored in both.

#include <cubedist/identities.hpp>
#include <cubedist/negative_type.hpp>
#include <cubedist/tree.hpp>

#include <nlohmann/json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace cubedist {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Throws ParseError for malformed lines (wrong lengths, characters outside
/// {0,1}, wrong point count) and DegenerateMetricError for duplicates.
PointSet parse_point_set(std::istream& in);
std::string format_point_set(const PointSet& s);

/// Throws ParseError for malformed lines and InvalidTreeError for graphs
/// that are not trees.
UnweightedTree parse_tree(std::istream& in);

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Json matrix_json(const RationalMatrix& m);
Json vector_json(const RationalVector& v);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const DetReport& report);
Json to_json(const NegTypeReport& report);
Json tree_report_json(const UnweightedTree& t);

}  // namespace cubedist
