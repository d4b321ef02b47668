#pragma once

// The acceptance checks, shared by the acceptance test and `verify-paper`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curveforge::verify {

struct CheckResult {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

enum class Verdict { pass, fail, skipped, disclosure };
std::string to_string(Verdict v);

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    bool disclosure = false;
    std::string note;
    double seconds = 0;

    Verdict verdict() const;
};

struct Options {
    /// Restrict the field-indexed checks to this q.
    std::optional<unsigned> q;
    std::uint64_t seed = 20240601;
    unsigned random_sets = 1000;
    unsigned random_pairs = 500;
    unsigned random_equivalences = 100;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, const Options& opts);
std::vector<CriterionResult> run_all(const Options& opts);

}  // namespace curveforge::verify
