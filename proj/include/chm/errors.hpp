#pragma once

#include <stdexcept>
#include <string>

namespace chm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// scalar / exact arithmetic
class OrderMismatch : public Error { public: using Error::Error; };
class ArithmeticOverflow : public Error { public: using Error::Error; };
class NotUnimodular : public Error { public: using Error::Error; };

// matrix
class CertificationError : public Error { public: using Error::Error; };
class DephaseError : public Error { public: using Error::Error; };
class ConvergenceError : public Error { public: using Error::Error; };
class NotSelfAdjoint : public Error { public: using Error::Error; };

// frames
class NotASignature : public Error { public: using Error::Error; };
class InconsistentMu : public Error { public: using Error::Error; };
class MuOutOfRange : public Error { public: using Error::Error; };
class NonConstantDiagonal : public Error { public: using Error::Error; };
class NotSelfAdjointAfterShift : public Error { public: using Error::Error; };
class ClusterCountMismatch : public Error { public: using Error::Error; };
class DegenerateK : public Error { public: using Error::Error; };
class RankMismatch : public Error { public: using Error::Error; };
class NotSquareOrder : public Error { public: using Error::Error; };
class NonIntegerMultiplicity : public Error { public: using Error::Error; };

// lift
class GridShapeMismatch : public Error { public: using Error::Error; };
class SelfAdjointConstraintViolated : public Error { public: using Error::Error; };
class UnknownName : public Error { public: using Error::Error; };
class UnsupportedOrder : public Error { public: using Error::Error; };

// designs
class NotPrime : public Error { public: using Error::Error; };
class WrongResidueClass : public Error { public: using Error::Error; };
class NotADesign : public Error { public: using Error::Error; };
class NotHadamardParameters : public NotADesign { public: using NotADesign::NotADesign; };
class NotSkew : public Error { public: using Error::Error; };

// io
class ParseError : public Error { public: using Error::Error; };

}  // namespace chm
