#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace smoothavg {

/// Base class for every contract violation raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kernel construction failures. The CLI maps these to exit code 3.
class KernelContractError : public Error {
public:
    using Error::Error;
};

class AsymmetricKernel : public KernelContractError {
public:
    AsymmetricKernel(double max_asymmetry, std::size_t index)
        : KernelContractError("kernel is not symmetric: |v(n+k) - v(n-k)| = " + std::to_string(max_asymmetry) +
                              " at k = " + std::to_string(index)),
          max_asymmetry(max_asymmetry), index(index) {}
    double max_asymmetry;
    std::size_t index;
};

class NotNormalized : public KernelContractError {
public:
    explicit NotNormalized(double sum)
        : KernelContractError("kernel weights do not sum to 1 (sum = " + std::to_string(sum) + ")"), sum(sum) {}
    double sum;
};

class NotNormalizedSymbol : public KernelContractError {
public:
    explicit NotNormalizedSymbol(double value_at_one)
        : KernelContractError("symbol does not satisfy p(1) = 1 (p(1) = " + std::to_string(value_at_one) + ")"),
          value_at_one(value_at_one) {}
    double value_at_one;
};

class NotMonic : public Error {
public:
    explicit NotMonic(double leading)
        : Error("polynomial is not monic: leading coefficient " + std::to_string(leading)), leading(leading) {}
    double leading;
};

class DegenerateOperator : public Error {
public:
    DegenerateOperator() : Error("operator symbol |s|^2 vanishes identically") {}
};

/// Raised by the theorem verifiers; carries the kernel half that triggered it.
class BoundViolated : public Error {
public:
    BoundViolated(const std::string& what, std::vector<double> half, double constant, double bound)
        : Error(what), half(std::move(half)), constant(constant), bound(bound) {}
    std::vector<double> half;
    double constant;
    double bound;
};

class HypothesisViolated : public Error {
public:
    HypothesisViolated(double witness_x, double min_value)
        : Error("Fourier symbol is negative at x = " + std::to_string(witness_x) +
                " (value " + std::to_string(min_value) + ")"),
          witness_x(witness_x), min_value(min_value) {}
    double witness_x;
    double min_value;
};

class Infeasible : public Error {
public:
    using Error::Error;
};

/// Malformed file or command-line input. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ZeroMass : public Error {
public:
    explicit ZeroMass(double mass) : Error("profile has (near) zero L1 mass: " + std::to_string(mass)), mass(mass) {}
    double mass;
};

}  // namespace smoothavg
