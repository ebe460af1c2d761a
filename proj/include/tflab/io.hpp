#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tflab/error.hpp"
#include "tflab/ring_props.hpp"
#include "tflab/set_descriptor.hpp"
#include "tflab/step_function.hpp"
#include "tflab/topoframe.hpp"

namespace tflab {

/// Parse failure carrying a source position. SyntaxError marks grammar
/// trouble; ValidationError wraps a library rejection of a well-formed
/// construct, keeping the position where it appeared.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int column, const std::string& msg)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedDocument {
  std::shared_ptr<const Topoframe> tf;
  std::vector<std::pair<std::string, StepFunction>> functions;

  /// Null when the name is absent.
  const StepFunction* find(const std::string& name) const;
};

/// Line-oriented document grammar; '#' starts a comment, tokens are
/// whitespace-separated:
///   space powerset N         the powerset of {1..N}
///   poset K                  downset lattice of a K-node poset (0-based)
///   cover i j                poset cover relation i < j
///   order N                  arbitrary order on elements e0..e(N-1)
///   leq i j                  ei <= ej (list the full transitive order)
///   tau SET SET ...          the open elements, by element name
///   fn NAME = v@SET ; ...    a step function literal
/// Exactly one lattice declaration and one tau line, in that order;
/// function lines come last.
ParsedDocument parse_document(const std::string& text);

/// Canonical text: declaration, sorted tau, functions sorted by name with
/// canonical pieces. print -> parse -> print is a fixpoint.
std::string print_document(const ParsedDocument& doc);

/// Rational set descriptors: 'R', '{}', point sets like {1,3/2}, intervals
/// with rational or inf/-inf bounds, '!' for complement and 'u' for union,
/// e.g. "[0,1) u {2} u !(-inf,3]".
SetDescriptor parse_set_descriptor(const std::string& text);

/// Deterministic identifier: declaration digest plus the tau bitmask.
std::string instance_id(const Topoframe& tf);

nlohmann::ordered_json property_json(const Topoframe& tf,
                                     const PropertyReport& r);
nlohmann::ordered_json theorem_json(const TheoremReport& rep);
/// Whole report document, tagged "schema": 1; theorems optional.
nlohmann::ordered_json report_json(const Topoframe& tf,
                                   const PropertyReport& props,
                                   const TheoremReport* theorems);

std::string property_text(const Topoframe& tf, const PropertyReport& r);
std::string theorem_text(const TheoremReport& rep);

}  // namespace tflab
