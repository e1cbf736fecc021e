#include "qml/logic.hpp"

#include <cmath>

namespace qml {

PropPtr make_classical_atom(std::string id) {
  return std::make_shared<const Proposition>(
      Proposition{ClassicalAtom{std::move(id)}});
}

PropPtr make_quantum_atom(Complex label) {
  return std::make_shared<const Proposition>(Proposition{QuantumAtom{label}});
}

PropPtr make_classical_and(PropPtr left, PropPtr right) {
  return std::make_shared<const Proposition>(
      Proposition{ClassicalAnd{std::move(left), std::move(right)}});
}

PropPtr make_quantum_and(Complex degree_left, Complex degree_right,
                         PropPtr left, PropPtr right) {
  return std::make_shared<const Proposition>(Proposition{
      QuantumAnd{degree_left, degree_right, std::move(left), std::move(right)}});
}

namespace {

bool complex_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol;
}

bool prop_cmp(const Proposition& a, const Proposition& b, double tol,
              bool exact) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ca = std::get_if<ClassicalAtom>(&a.node))
    return ca->id == std::get<ClassicalAtom>(b.node).id;
  if (const auto* qa = std::get_if<QuantumAtom>(&a.node)) {
    const auto& qb = std::get<QuantumAtom>(b.node);
    return exact ? qa->label == qb.label
                 : complex_close(qa->label, qb.label, tol);
  }
  if (const auto* ka = std::get_if<ClassicalAnd>(&a.node)) {
    const auto& kb = std::get<ClassicalAnd>(b.node);
    return prop_cmp(*ka->left, *kb.left, tol, exact) &&
           prop_cmp(*ka->right, *kb.right, tol, exact);
  }
  const auto& na = std::get<QuantumAnd>(a.node);
  const auto& nb = std::get<QuantumAnd>(b.node);
  const bool degrees_match =
      exact ? (na.degree_left == nb.degree_left &&
               na.degree_right == nb.degree_right)
            : (complex_close(na.degree_left, nb.degree_left, tol) &&
               complex_close(na.degree_right, nb.degree_right, tol));
  return degrees_match && prop_cmp(*na.left, *nb.left, tol, exact) &&
         prop_cmp(*na.right, *nb.right, tol, exact);
}

}  // namespace

bool prop_equal(const Proposition& a, const Proposition& b) {
  return prop_cmp(a, b, 0.0, /*exact=*/true);
}

bool prop_close(const Proposition& a, const Proposition& b, double tol) {
  return prop_cmp(a, b, tol, /*exact=*/false);
}

Assertion Assertion::classical(PropPtr prop) {
  return Assertion{std::nullopt, std::move(prop)};
}

Assertion Assertion::quantum(Complex degree, PropPtr prop) {
  if (std::abs(degree) > 1.0)
    throw DegreeOutOfRange("assertion degree must satisfy |alpha| <= 1");
  return Assertion{degree, std::move(prop)};
}

bool assertion_equal(const Assertion& a, const Assertion& b) {
  if (a.degree.has_value() != b.degree.has_value()) return false;
  if (a.degree && *a.degree != *b.degree) return false;
  return prop_equal(*a.prop, *b.prop);
}

bool metajunction_equal(const MetaJunction& a, const MetaJunction& b) {
  if (a.parts.size() != b.parts.size()) return false;
  for (size_t i = 0; i < a.parts.size(); ++i)
    if (!assertion_equal(a.parts[i], b.parts[i])) return false;
  return true;
}

namespace {

struct PropFlags {
  bool classical_atom = false;
  bool quantum_atom = false;
  bool quantum_and = false;
};

void scan_prop(const Proposition& p, PropFlags& f) {
  if (std::holds_alternative<ClassicalAtom>(p.node)) {
    f.classical_atom = true;
  } else if (std::holds_alternative<QuantumAtom>(p.node)) {
    f.quantum_atom = true;
  } else if (const auto* c = std::get_if<ClassicalAnd>(&p.node)) {
    scan_prop(*c->left, f);
    scan_prop(*c->right, f);
  } else {
    const auto& q = std::get<QuantumAnd>(p.node);
    f.quantum_and = true;
    scan_prop(*q.left, f);
    scan_prop(*q.right, f);
  }
}

}  // namespace

Level level_of(const Proposition& p) {
  PropFlags f;
  scan_prop(p, f);
  if (!f.quantum_atom && !f.quantum_and) return Level::Classical;
  if (!f.classical_atom) return Level::Quantum;
  return Level::Mixed;
}

Level level_of(const Assertion& a) {
  const Level prop_level = level_of(*a.prop);
  if (a.degree) return prop_level == Level::Quantum ? Level::Quantum : Level::Mixed;
  return prop_level == Level::Classical ? Level::Classical : Level::Mixed;
}

Level level_of(const MetaJunction& m) {
  Level level = level_of(m.parts.front());
  for (size_t i = 1; i < m.parts.size(); ++i)
    if (level_of(m.parts[i]) != level) return Level::Mixed;
  return level;
}

SequentClass classify_sequent(const Sequent& s) {
  const bool ante_empty = s.antecedent.empty();
  const bool cons_empty = s.consequent.empty();
  if (ante_empty && cons_empty)
    throw EmptySequent("sequent with both contexts empty");
  if (ante_empty) return SequentClass::LogicalAssertion;
  if (cons_empty) return SequentClass::Inconsistency;
  return SequentClass::Ordinary;
}

Assertion reflect_down(const MetaJunction& m) {
  if (m.parts.size() < 2)
    throw ArityError("reflection needs at least two assertions");
  const Level level = level_of(m);
  if (level == Level::Mixed)
    throw MixedLevel("cannot reflect a mixed-level metajunction");
  if (level == Level::Classical) {
    PropPtr acc = m.parts[0].prop;
    for (size_t i = 1; i < m.parts.size(); ++i)
      acc = make_classical_and(acc, m.parts[i].prop);
    return Assertion::classical(acc);
  }
  // Quantum: the connective absorbs exactly two degrees, so a nested fold
  // has no degree left for the intermediate assertion.
  if (m.parts.size() != 2)
    throw ArityError("quantum reflection is binary");
  return Assertion::classical(make_quantum_and(*m.parts[0].degree,
                                               *m.parts[1].degree,
                                               m.parts[0].prop,
                                               m.parts[1].prop));
}

MetaJunction reflect_up(const Assertion& a) {
  if (a.degree)
    throw NotCompound("a degree-bearing assertion is not a reflected form");
  if (const auto* c = std::get_if<ClassicalAnd>(&a.prop->node))
    return MetaJunction{{Assertion::classical(c->left),
                         Assertion::classical(c->right)}};
  if (const auto* q = std::get_if<QuantumAnd>(&a.prop->node))
    return MetaJunction{{Assertion::quantum(q->degree_left, q->left),
                         Assertion::quantum(q->degree_right, q->right)}};
  throw NotCompound("cannot reflect an atomic proposition upward");
}

namespace {

bool contains_quantum_material(const Assertion& a) {
  if (a.degree) return true;
  PropFlags f;
  scan_prop(*a.prop, f);
  return f.quantum_atom || f.quantum_and;
}

}  // namespace

ReflectionCheck check_reflection(const MetaJunction& m, const Assertion& a) {
  try {
    if (assertion_equal(reflect_down(m), a)) return ReflectionCheck{true, "", ""};
  } catch (const Error&) {
    // fall through to the diagnosis below
  }
  const Level meta_level = level_of(m);
  const bool object_quantum = contains_quantum_material(a);
  if (meta_level == Level::Classical && object_quantum)
    return ReflectionCheck{
        false, "E_LEVEL_52",
        "classical metalanguage cannot reflect into a quantum connective: "
        "amplitudes appear from nowhere"};
  if (meta_level == Level::Quantum && !object_quantum)
    return ReflectionCheck{
        false, "E_LEVEL_53",
        "quantum metalanguage cannot reflect into a classical connective: "
        "assertion degrees discarded"};
  return ReflectionCheck{false, "E_LEVEL_MISMATCH",
                         "object-language assertion is not the reflection of "
                         "the metajunction"};
}

StructuralRuleRejection apply_structural_rule(StructuralRule rule,
                                              const Sequent&) {
  if (rule == StructuralRule::Contraction)
    return StructuralRuleRejection{
        rule, "E_STRUCT_CONTRACTION",
        "contraction duplicates a context formula, violating no-cloning"};
  return StructuralRuleRejection{
      rule, "E_STRUCT_WEAKENING",
      "weakening discards a context formula, violating no-erase"};
}

}  // namespace qml
