#pragma once

#include <stdexcept>
#include <string>

namespace steinbench {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDistribution : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class UnsupportedKernel : public Error { public: using Error::Error; };
class NonConvergence : public Error { public: using Error::Error; };
class SingularKernel : public Error { public: using Error::Error; };
class InvalidMoments : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class CapacityError : public Error { public: using Error::Error; };
class InvalidFamily : public Error { public: using Error::Error; };
class DataError : public Error { public: using Error::Error; };

}  // namespace steinbench
