#pragma once

#include <stdexcept>
#include <string>

namespace cfp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry
struct CollinearPoints : Error {
    using Error::Error;
};
struct DegenerateRay : Error {
    using Error::Error;
};
struct RationalOverflow : Error {
    using Error::Error;
};

// classifier
struct TooFewRobots : Error {
    using Error::Error;
};

// procedures
struct NotAlignedQuasi : Error {
    using Error::Error;
};
struct NotArbitraryQuasi : Error {
    using Error::Error;
};
struct NotStrictBiangular : Error {
    using Error::Error;
};
struct UnsupportedN : Error {
    using Error::Error;
};

// utp adversary
struct InvalidAlpha : Error {
    using Error::Error;
};
struct RuleContractViolation : Error {
    using Error::Error;
};
struct CertificateViolated : Error {
    using Error::Error;
};

// io
struct ParseError : Error {
    using Error::Error;
};

}  // namespace cfp
