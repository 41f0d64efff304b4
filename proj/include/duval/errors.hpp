#pragma once

#include <stdexcept>
#include <string>

namespace duval {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Mathematical precondition failures (CLI exit code 3).
struct MathError : Error {
  using Error::Error;
};

struct VarSetMismatch : MathError {
  explicit VarSetMismatch(const std::string& msg) : MathError("varset mismatch: " + msg) {}
};

struct ZeroPolynomial : MathError {
  explicit ZeroPolynomial(const std::string& where) : MathError("zero polynomial in " + where) {}
};

struct NotStabilized : MathError {
  explicit NotStabilized(const std::string& msg) : MathError("NotStabilized: " + msg) {}
};

struct QuotientChartUnsupported : MathError {
  explicit QuotientChartUnsupported(const std::string& msg)
      : MathError("QuotientChartUnsupported: " + msg) {}
};

struct UnsupportedCenter : MathError {
  explicit UnsupportedCenter(const std::string& msg) : MathError("UnsupportedCenter: " + msg) {}
};

struct DegenerateCenter : MathError {
  explicit DegenerateCenter(const std::string& msg) : MathError("degenerate center: " + msg) {}
};

struct InputNotNormalForm : MathError {
  explicit InputNotNormalForm(const std::string& msg) : MathError("InputNotNormalForm: " + msg) {}
};

struct NotDType : MathError {
  explicit NotDType(const std::string& msg) : MathError("curve position needs a D-type germ: " + msg) {}
};

struct StrictTransformMissesGraph : MathError {
  explicit StrictTransformMissesGraph(const std::string& msg)
      : MathError("StrictTransformMissesGraph: " + msg) {}
};

struct NotD5 : MathError {
  explicit NotD5(const std::string& msg) : MathError("NotD5: " + msg) {}
};

struct DFlPosition : MathError {
  explicit DFlPosition(const std::string& msg) : MathError("DFlPosition: " + msg) {}
};

struct ReductionDiverged : MathError {
  explicit ReductionDiverged(const std::string& msg) : MathError("ReductionDiverged: " + msg) {}
};

struct ChartMismatch : MathError {
  explicit ChartMismatch(const std::string& msg) : MathError("ChartMismatch: " + msg) {}
};

struct CurveInsideDivisor : MathError {
  explicit CurveInsideDivisor(const std::string& msg) : MathError("CurveInsideDivisor: " + msg) {}
};

struct LedgerError : MathError {
  using MathError::MathError;
};

struct UnsupportedResolution : MathError {
  explicit UnsupportedResolution(const std::string& msg)
      : MathError("unsupported resolution input: " + msg) {}
};

}  // namespace duval
