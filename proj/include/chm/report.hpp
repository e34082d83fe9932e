#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chm {

enum class Mode { Exact, Float };

inline const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

struct Check {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

/// Machine-readable certificate: which checks ran, in which arithmetic mode,
/// each with its numeric residual. pass is the conjunction of all checks.
struct VerificationReport {
    Mode mode = Mode::Float;
    double tolerance = 0.0;
    std::vector<Check> checks;
    bool pass = true;

    void add(std::string name, bool ok, double residual) {
        checks.push_back({std::move(name), ok, residual});
        pass = pass && ok;
    }

    const Check* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace chm
