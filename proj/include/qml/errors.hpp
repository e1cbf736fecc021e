#ifndef QML_ERRORS_HPP
#define QML_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace qml {

// Base for all domain errors. Every error carries a stable machine-readable
// code so the CLI can surface it without string matching.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct TruncationMismatch : Error {
  explicit TruncationMismatch(const std::string& what)
      : Error("E_TRUNCATION_MISMATCH", what) {}
};

struct NotNormalized : Error {
  explicit NotNormalized(const std::string& what)
      : Error("E_NOT_NORMALIZED", what) {}
};

struct QuadratureUnderResolved : Error {
  explicit QuadratureUnderResolved(const std::string& what)
      : Error("E_QUADRATURE_UNDER_RESOLVED", what) {}
};

struct EmptySequent : Error {
  explicit EmptySequent(const std::string& what)
      : Error("E_EMPTY_SEQUENT", what) {}
};

struct MixedLevel : Error {
  explicit MixedLevel(const std::string& what) : Error("E_MIXED_LEVEL", what) {}
};

struct ArityError : Error {
  explicit ArityError(const std::string& what) : Error("E_ARITY", what) {}
};

struct NotCompound : Error {
  explicit NotCompound(const std::string& what)
      : Error("E_NOT_COMPOUND", what) {}
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& what)
      : Error("E_DEGREE_OUT_OF_RANGE", what) {}
};

struct UnknownAtom : Error {
  explicit UnknownAtom(const std::string& what)
      : Error("E_UNKNOWN_ATOM", what) {}
};

struct ZeroState : Error {
  explicit ZeroState(const std::string& what) : Error("E_ZERO_STATE", what) {}
};

struct NoRoot : Error {
  explicit NoRoot(const std::string& what) : Error("E_NO_ROOT", what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error("E_SCHEMA", what) {}
};

struct BadGate : Error {
  explicit BadGate(const std::string& what) : Error("E_BAD_GATE", what) {}
};

struct QubitIndexOutOfRange : Error {
  explicit QubitIndexOutOfRange(const std::string& what)
      : Error("E_QUBIT_INDEX_OUT_OF_RANGE", what) {}
};

struct NormDrift : Error {
  explicit NormDrift(const std::string& what) : Error("E_NORM_DRIFT", what) {}
};

struct StateTooLarge : Error {
  explicit StateTooLarge(const std::string& what)
      : Error("E_STATE_TOO_LARGE", what) {}
};

}  // namespace qml

#endif  // QML_ERRORS_HPP
