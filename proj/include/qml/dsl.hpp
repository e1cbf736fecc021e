#ifndef QML_DSL_HPP
#define QML_DSL_HPP

#include <string>
#include <variant>
#include <vector>

#include "qml/logic.hpp"
#include "qml/robot.hpp"
#include "qml/semantics.hpp"

#include <nlohmann/json_fwd.hpp>

namespace qml {

struct SourceSpan {
  size_t start = 0;  // byte offsets into the input text
  size_t end = 0;
};

/// Parse failure with the offending span and what was expected there.
class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::vector<std::string> expected,
             const std::string& what)
      : Error("E_PARSE", what), span_(span), expected_(std::move(expected)) {}
  SourceSpan span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// A reflection claim pairs an object-language assertion with the
/// metajunction it is claimed to reflect: `assertion iff junction`.
struct ReflectionClaim {
  Assertion object;
  MetaJunction meta;
};

using ParsedNode = std::variant<MetaJunction, Sequent, ReflectionClaim>;

/// Grammar (whitespace-insensitive):
///   claim     := assertion "iff" junction
///   junction  := assertion ("and" assertion)*
///   sequent   := proplist? "|-" proplist?     (chosen when the text does not
///                start with "|-", or contains a top-level comma)
///   assertion := "|-" ("^{" complex "}")? prop
///   prop      := andprop ("(" complex "&_" complex ")" andprop)*
///   andprop   := primary ("&" primary)*
///   primary   := "p0" | "p1" | "p{" complex "}" | "(" prop ")"
///   complex   := real (("+"|"-") real "i")? | real "@" real
ParsedNode parse(const std::string& text);

/// Convenience wrappers that also check the parse produced the wanted shape.
MetaJunction parse_junction(const std::string& text);
Assertion parse_assertion(const std::string& text);
Complex parse_complex(const std::string& text);

/// Canonical text. parse(format(x)) == x for every valid AST.
std::string format(Complex z);
std::string format(const Proposition& p);
std::string format(const Assertion& a);
std::string format(const MetaJunction& m);
std::string format(const Sequent& s);
std::string format(const ReflectionClaim& c);
std::string format(const ParsedNode& n);

// --- JSON (schema 1; complex numbers as [re, im] pairs) -------------------

nlohmann::json to_json(const FockVector& v);
nlohmann::json to_json(const QubitState& q);
nlohmann::json to_json(const AssertionSemantics& s);
nlohmann::json to_json(const Proposition& p);
nlohmann::json to_json(const Assertion& a);
nlohmann::json to_json(const MetaJunction& m);
nlohmann::json to_json(const Sequent& s);
nlohmann::json to_json(const ReflectionClaim& c);
nlohmann::json to_json(const ParsedNode& n);
nlohmann::json to_json(const Task& t);
nlohmann::json to_json(const TrajectoryReport& r);

FockVector fock_from_json(const nlohmann::json& j);
QubitState qubit_from_json(const nlohmann::json& j);
AssertionSemantics semantics_from_json(const nlohmann::json& j);
PropPtr prop_from_json(const nlohmann::json& j);
Assertion assertion_from_json(const nlohmann::json& j);
MetaJunction junction_from_json(const nlohmann::json& j);
Sequent sequent_from_json(const nlohmann::json& j);
Task task_from_json(const nlohmann::json& j);

}  // namespace qml

#endif  // QML_DSL_HPP
