#pragma once

#include <string>
#include <vector>

#include "annular/numeric.hpp"

namespace annular {

struct RelationCheck {
    std::string relation;
    bool pass = false;
    Real max_residual = Real(0); // 0 for exact checks
};

struct VerificationReport {
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    Real worst_residual() const {
        Real w(0);
        for (const auto& c : checks)
            if (c.max_residual > w) w = c.max_residual;
        return w;
    }
    void add(std::string name, bool pass, Real res = Real(0)) {
        checks.push_back({std::move(name), pass, std::move(res)});
    }
    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

} // namespace annular
