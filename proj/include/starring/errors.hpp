#pragma once

#include <stdexcept>
#include <string>

namespace starring {

/** Base class for all errors raised by this library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Invalid ring description (unknown kind, n < 2, composite p, k < 1, ...). */
struct DescriptorError : Error {
    using Error::Error;
};

/** Two elements from different rings were combined. */
struct RingMismatchError : Error {
    using Error::Error;
};

/** Malformed textual or JSON input; message carries the offending position. */
struct ParseError : Error {
    using Error::Error;
};

/** Operation needs a finite carrier but the ring is infinite. */
struct UnsupportedError : Error {
    using Error::Error;
};

/** Enumeration or scan would exceed the configured element cap. */
struct ResourceError : Error {
    using Error::Error;
};

/** A witness handed to a formula does not satisfy its defining equation. */
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace starring
