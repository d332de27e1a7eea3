#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmw {

/// Base class for data-dependent failures. Configuration mistakes are
/// reported with std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySample : public Error {
public:
    explicit EmptySample(char sample)
        : Error(std::string("empty sample: ") + sample), sample_(sample) {}
    char sample() const noexcept { return sample_; }

private:
    char sample_;
};

class NonFiniteValue : public Error {
public:
    NonFiniteValue(char sample, std::size_t index)
        : Error(std::string("non-finite value in sample ") + sample + " at index " +
                std::to_string(index)),
          sample_(sample), index_(index) {}
    char sample() const noexcept { return sample_; }
    std::size_t index() const noexcept { return index_; }

private:
    char sample_;
    std::size_t index_;
};

class TooSmall : public Error {
public:
    using Error::Error;
};

class TiesPresent : public Error {
public:
    TiesPresent() : Error("ties present: BC requires continuous data") {}
};

class TooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace wmw
