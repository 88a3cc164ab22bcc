#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

// Base class for everything the library throws. The CLI maps usage-type
// errors to exit code 2 and verification failures to exit code 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeP : Error {
  explicit NonPrimeP(const std::string& w) : Error("NonPrimeP: " + w) {}
};
struct ReducibleModulus : Error {
  explicit ReducibleModulus(const std::string& w) : Error("ReducibleModulus: " + w) {}
};
struct MissingModulus : Error {
  explicit MissingModulus(const std::string& w) : Error("MissingModulus: " + w) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& w) : Error("DivisionByZero: " + w) {}
};
struct BothZero : Error {
  explicit BothZero(const std::string& w) : Error("BothZero: " + w) {}
};
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& w) : Error("NotInvertible: " + w) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& w) : Error("BudgetExceeded: " + w) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& w) : Error("IndexOutOfRange: " + w) {}
};
struct ExcludedPrime : Error {
  explicit ExcludedPrime(const std::string& w) : Error("ExcludedPrime: " + w) {}
};
struct NotIrreducible : Error {
  explicit NotIrreducible(const std::string& w) : Error("NotIrreducible: " + w) {}
};
struct InexactDivision : Error {
  explicit InexactDivision(const std::string& w) : Error("InexactDivision: " + w) {}
};
struct NoSolution : Error {
  explicit NoSolution(const std::string& w) : Error("NoSolution: " + w) {}
};
struct ValidationFailed : Error {
  explicit ValidationFailed(const std::string& w) : Error("ValidationFailed: " + w) {}
};

}  // namespace carlitz
