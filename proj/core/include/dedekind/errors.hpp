#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Shape mismatch (non-square where square required, length mismatch, ...). */
class DimensionError : public Error { public: using Error::Error; };

/* An HNF input did not have full row rank. */
class RankDeficientError : public Error { public: using Error::Error; };

/* A nonsingular matrix was required. */
class SingularError : public Error { public: using Error::Error; };

/* Matrix not invertible modulo the given modulus. */
class NotUnimodularError : public Error { public: using Error::Error; };

/* A nonzero element with zero norm: the multiplication table cannot
 * describe an integral domain of finite rank. */
class NotADomainError : public Error { public: using Error::Error; };

/* Both generators of a two-generator ideal are zero. */
class ZeroIdealError : public Error { public: using Error::Error; };

/* A finite-ring presentation violates its invariants. */
class PresentationError : public Error { public: using Error::Error; };

/* Brute-force enumeration refused: quotient larger than the cap. */
class CapExceededError : public Error { public: using Error::Error; };

class ParseError : public Error { public: using Error::Error; };

}  // namespace dedekind
