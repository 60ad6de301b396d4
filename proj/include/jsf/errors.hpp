#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jsf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A letter does not belong to the alphabet it is used with.
class AlphabetViolation : public Error {
public:
    using Error::Error;
};

/// Two Parikh vectors (or fingerprints) were built over different alphabets.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// p(u) is not dominated by p(w), so u has no jumble index in w.
class NotJumbledScatFact : public Error {
public:
    using Error::Error;
};

/// The hypothesis of a construction is violated; the message names the clause.
class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

/// The requested problem instance has no solution (e.g. k outside the valid range).
class NoSolution : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its documented domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration would visit more candidate words than the configured cap.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t cap)
        : Error("enumeration needs " + std::to_string(required) +
                " candidate words, exceeding the cap of " + std::to_string(cap)),
          required_(required), cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace jsf
