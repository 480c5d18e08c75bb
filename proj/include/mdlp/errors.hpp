#pragma once

#include <stdexcept>
#include <string>

namespace mdlp {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid descriptor parameters (neighbor count, radius, mesh distance, grid).
class ParamError : public Error {
public:
    using Error::Error;
};

// Mismatched vector/image dimensions between two operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

// An image too small for the requested operation.
class SizeError : public Error {
public:
    using Error::Error;
};

// A coordinate outside the valid interior region.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Ingestion found no usable images.
class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

// A query was issued against an index with no entries.
class EmptyIndexError : public Error {
public:
    using Error::Error;
};

// Entries disagree with each other or with their declared header.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Malformed file contents (bad magic, undecodable image, trailing bytes).
class FormatError : public Error {
public:
    using Error::Error;
};

// An index file written by an incompatible format version.
class VersionError : public Error {
public:
    using Error::Error;
};

// A file shorter than its own declared contents.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Operating-system level I/O failure, with path context in the message.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mdlp
