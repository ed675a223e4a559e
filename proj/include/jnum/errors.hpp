#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jnum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error { using Error::Error; };
struct InvalidPairError : UsageError { using UsageError::UsageError; };
struct SizeLimitError : UsageError { using UsageError::UsageError; };

struct NumericRangeError : Error { using Error::Error; };
struct DegenerateInputError : Error { using Error::Error; };
struct EmptySearchError : Error { using Error::Error; };
struct UnsupportedBranchError : Error { using Error::Error; };
struct NoGeometricRootError : Error { using Error::Error; };
struct DegenerateLinkError : Error { using Error::Error; };

struct NumericFailureError : Error {
    NumericFailureError(const std::string& what, std::vector<std::complex<double>> partial)
        : Error(what), partial_roots(std::move(partial)) {}
    std::vector<std::complex<double>> partial_roots;
};

}  // namespace jnum
