#ifndef QLAW_VALIDATE_HPP
#define QLAW_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qlaw {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast self-check suite behind the `validate` subcommand: conversion round
/// trips, variational-matrix cross-checks, analytic-gradient agreement,
/// direction optimality, integrator order. Runs in a few seconds.
std::vector<CheckResult> run_validation_suite(std::uint64_t seed = 20260801);

}  // namespace qlaw

#endif  // QLAW_VALIDATE_HPP
