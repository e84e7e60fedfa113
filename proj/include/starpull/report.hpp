#pragma once

// Sampling parameters and the pass/fail report shared by the checks and suites.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "starpull/error.hpp"

namespace starpull {

struct SampleParams {
    std::uint64_t seed = 1;
    int count = 100;
    int max_generators = 3;
    int max_degree = 3;
    long height = 9;  // coefficient numerators and denominators stay within this bound
    int window = 12;  // X-shift window of the v-oracle witness search

    void validate() const
    {
        if (count <= 0 || max_generators <= 0 || max_degree < 0 || height <= 0 || window <= 0)
            throw precondition_error("sample parameters must be positive");
    }
};

struct Violation {
    std::size_t sample = 0;
    std::string expected;
    std::string got;
    std::string witness;
};

struct Report {
    std::string suite;
    std::string instance;
    SampleParams params;
    std::size_t n_samples = 0;
    std::vector<Violation> violations;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool pass() const { return violations.empty(); }

    void fail(std::size_t sample, std::string expected, std::string got, std::string witness)
    {
        violations.push_back({sample, std::move(expected), std::move(got), std::move(witness)});
    }

    /// Appends the other report's violations, tagging them with its suite name.
    void absorb(const Report& other, const std::string& label)
    {
        for (const auto& v : other.violations)
            violations.push_back({v.sample, label + ": " + v.expected, v.got, v.witness});
        n_samples += other.n_samples;
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["instance"] = instance;
        j["seed"] = params.seed;
        j["params"] = {{"count", params.count},
                       {"max_generators", params.max_generators},
                       {"max_degree", params.max_degree},
                       {"height", params.height},
                       {"window", params.window}};
        j["n_samples"] = n_samples;
        j["n_violations"] = violations.size();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : violations)
            arr.push_back({{"sample", v.sample}, {"expected", v.expected}, {"got", v.got}, {"witness", v.witness}});
        j["violations"] = arr;
        j["details"] = details;
        j["verdict"] = pass() ? "pass" : "fail";
        return j;
    }
};

} // namespace starpull
