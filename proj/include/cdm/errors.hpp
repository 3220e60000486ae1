#pragma once

#include <stdexcept>
#include <string>

namespace cdm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileNotFound : Error {
    using Error::Error;
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct CorruptImage : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidChannel : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct OutsideInterior : Error {
    using Error::Error;
};

struct InvalidRect : Error {
    using Error::Error;
};

struct CorruptDump : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace cdm
