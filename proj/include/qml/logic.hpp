#ifndef QML_LOGIC_HPP
#define QML_LOGIC_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qml/errors.hpp"
#include "qml/fock.hpp"

namespace qml {

// ---------------------------------------------------------------------------
// Object-language AST
// ---------------------------------------------------------------------------

struct Proposition;
using PropPtr = std::shared_ptr<const Proposition>;

struct ClassicalAtom {
  std::string id;  // "p0" or "p1" in the concrete syntax
};

struct QuantumAtom {
  Complex label;  // the coherent amplitude naming the atom
};

struct ClassicalAnd {
  PropPtr left;
  PropPtr right;
};

// The superposition connective: carries the two degrees that reflection
// moved down from the metalanguage.
struct QuantumAnd {
  Complex degree_left;
  Complex degree_right;
  PropPtr left;
  PropPtr right;
};

struct Proposition {
  std::variant<ClassicalAtom, QuantumAtom, ClassicalAnd, QuantumAnd> node;
};

PropPtr make_classical_atom(std::string id);
PropPtr make_quantum_atom(Complex label);
PropPtr make_classical_and(PropPtr left, PropPtr right);
PropPtr make_quantum_and(Complex degree_left, Complex degree_right,
                         PropPtr left, PropPtr right);

/// Exact structural equality (complex fields compared field-by-field).
bool prop_equal(const Proposition& a, const Proposition& b);

/// Tolerance-based comparator for semantics-level checks; syntax stays exact.
bool prop_close(const Proposition& a, const Proposition& b, double tol);

// ---------------------------------------------------------------------------
// Metalanguage
// ---------------------------------------------------------------------------

/// `|- p` (classical, no degree) or `|-^{alpha} p` (quantum). Quantum
/// degrees are capped at |alpha| <= 1 so the truth degree |alpha|^2 stays
/// in [0, 1]; construction throws DegreeOutOfRange otherwise.
struct Assertion {
  std::optional<Complex> degree;
  PropPtr prop;

  static Assertion classical(PropPtr prop);
  static Assertion quantum(Complex degree, PropPtr prop);
};

bool assertion_equal(const Assertion& a, const Assertion& b);

/// Assertions joined by the metalinguistic link "and".
struct MetaJunction {
  std::vector<Assertion> parts;  // length >= 1
};

bool metajunction_equal(const MetaJunction& a, const MetaJunction& b);

struct Sequent {
  std::vector<PropPtr> antecedent;  // read conjunctively
  std::vector<PropPtr> consequent;  // read disjunctively
};

// ---------------------------------------------------------------------------
// Levels and classification
// ---------------------------------------------------------------------------

enum class Level { Classical, Quantum, Mixed };

Level level_of(const Proposition& p);
Level level_of(const Assertion& a);
Level level_of(const MetaJunction& m);

enum class SequentClass { LogicalAssertion, Inconsistency, Ordinary };

/// Empty antecedent -> LogicalAssertion; empty consequent -> Inconsistency.
/// Throws EmptySequent when both contexts are empty.
SequentClass classify_sequent(const Sequent& s);

// ---------------------------------------------------------------------------
// Reflection
// ---------------------------------------------------------------------------

/// Reflects a metajunction into a single object-language assertion.
/// Classical `|-A and |-B` becomes `|- A & B`; quantum `|-^a p_a and |-^b p_b`
/// becomes `|- p_a (a &_ b) p_b`, the degrees moving into the connective.
/// Classical junctions longer than two fold left-associatively; quantum
/// junctions must be binary (there is no degree left for a nested pair).
/// Throws MixedLevel or ArityError.
Assertion reflect_down(const MetaJunction& m);

/// Exact inverse of reflect_down on binary junctions. The input must be a
/// degree-less assertion of a compound proposition; throws NotCompound.
MetaJunction reflect_up(const Assertion& a);

struct ReflectionCheck {
  bool ok = false;
  std::string code;        // empty when ok; E_LEVEL_52 / E_LEVEL_53 otherwise
  std::string diagnostic;  // human-readable mismatch description
};

/// ok iff reflect_down(m) structurally equals a. A classical junction paired
/// with a quantum assertion is the "amplitudes appear from nowhere" defect
/// (E_LEVEL_52); a quantum junction paired with a classical assertion is the
/// "assertion degrees discarded" defect (E_LEVEL_53). Never throws.
ReflectionCheck check_reflection(const MetaJunction& m, const Assertion& a);

// ---------------------------------------------------------------------------
// Structural rules
// ---------------------------------------------------------------------------

enum class StructuralRule { Contraction, Weakening };

struct StructuralRuleRejection {
  StructuralRule rule;
  std::string code;    // E_STRUCT_CONTRACTION or E_STRUCT_WEAKENING
  std::string reason;  // the no-go theorem the rule would violate
};

/// Both structural rules are rejected unconditionally: contraction would
/// clone a formula, weakening would erase one. The rejection IS the result.
StructuralRuleRejection apply_structural_rule(StructuralRule rule,
                                              const Sequent& s);

}  // namespace qml

#endif  // QML_LOGIC_HPP
