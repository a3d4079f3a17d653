#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two words (or a word and a context) with different strand counts were combined.
class StrandMismatch : public Error {
public:
    using Error::Error;
};

/// A generator or strand index is out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// The word does not preserve the two strand blocks.
class NotInBnn : public Error {
public:
    using Error::Error;
};

/// The word neither preserves nor swaps the two strand blocks.
class NotInB2nn : public Error {
public:
    using Error::Error;
};

/// No generator of the presentation is sent to 1 by theta.
class ThetaNotSurjective : public Error {
public:
    using Error::Error;
};

/// A witness constructor was called outside its hypotheses.
class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

/// A homomorphism image falls outside the block-preserving-or-swapping subgroup.
class ImageNotInB2nn : public Error {
public:
    using Error::Error;
};

/// The classification input names a space/involution combination that does not exist.
class InvalidDescriptor : public Error {
public:
    using Error::Error;
};

/// A classification verdict and its constructive witness disagree.  Never expected.
class WitnessFailure : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed.  Never expected on valid inputs.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed braid-expression text; carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace braid
