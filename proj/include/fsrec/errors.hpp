#ifndef FSREC_ERRORS_HPP
#define FSREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsrec {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// An index set names a position that is out of range or has k_i == 0.
class InvalidIndexError : public Error {
public:
    using Error::Error;
};

class DuplicateElementError : public Error {
public:
    using Error::Error;
};

// The instance is too large for the configured caps; not a math failure.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class RankMismatchError : public Error {
public:
    using Error::Error;
};

} // namespace fsrec

#endif
