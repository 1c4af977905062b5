#pragma once

#include <stdexcept>
#include <string>

namespace grest {

// Malformed input: files, parameters, references to missing elements.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact routine was asked to run past its configured budget.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& cap_name, const std::string& detail)
        : std::runtime_error("budget exceeded (" + cap_name + "): " + detail),
          cap(cap_name) {}
    std::string cap;
};

// Numerical failure inside the LP solver, distinct from model infeasibility.
class lp_error : public std::runtime_error {
public:
    explicit lp_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grest
