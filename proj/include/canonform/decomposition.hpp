#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canonform/form.hpp"

namespace canonform {

/// multiplier * base^power
struct Term {
    Scalar multiplier;
    Form base;
    int power = 1;

    Form expand() const { return base.pow(power) * multiplier; }
};

/// Per-stage bookkeeping for iterative algorithms.
struct StageInfo {
    int stage = 0;
    std::vector<int> eliminated;
    int terms = 0;
};

struct Decomposition {
    std::vector<Term> terms;
    std::optional<Form> residual;
    std::string theorem;
    std::vector<StageInfo> stages;

    Form reconstruct(int n, int d) const;
    /// Exact equality for exact data, otherwise within eps * max(1, |p|).
    bool reconstructs(const Form& p, double eps = kDefaultEps) const;
    /// Max coefficient error relative to max(1, |p|).
    double error(const Form& p) const;
    bool is_exact() const;
};

}  // namespace canonform
