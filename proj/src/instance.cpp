#include "effortdist/instance.hpp"

#include <string>
#include <utility>

namespace effortdist {

int effort(const Profile& p) {
    int total = 0;
    for (int x : p) total += x;
    return total;
}

Instance validate_instance(int n, int m, std::vector<std::vector<Revenue>> R) {
    std::vector<ValidationError::Violation> violations;

    if (n < 1)
        violations.emplace_back(ErrorKind::EmptyInstance,
                                "n must be at least 1, got " + std::to_string(n));
    if (m < 1)
        violations.emplace_back(ErrorKind::EmptyInstance,
                                "m must be at least 1, got " + std::to_string(m));

    if (n >= 1 && static_cast<int>(R.size()) != n)
        violations.emplace_back(ErrorKind::ShapeMismatch,
                                "R has " + std::to_string(R.size()) + " rows, expected " +
                                    std::to_string(n));

    const std::size_t expected_len = m >= 1 ? static_cast<std::size_t>(m) + 1 : 0;
    for (std::size_t j = 0; j < R.size(); ++j) {
        if (m >= 1 && R[j].size() != expected_len) {
            violations.emplace_back(ErrorKind::ShapeMismatch,
                                    "row " + std::to_string(j) + " has length " +
                                        std::to_string(R[j].size()) + ", expected " +
                                        std::to_string(expected_len));
            continue;
        }
        if (!R[j].empty() && R[j][0] != 0)
            violations.emplace_back(ErrorKind::NonZeroBase,
                                    "R[" + std::to_string(j) + "][0] = " +
                                        std::to_string(R[j][0]) + ", must be 0");
    }

    if (!violations.empty()) throw ValidationError(std::move(violations));

    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.R = std::move(R);
    return inst;
}

Revenue profile_revenue(const Instance& inst, const Profile& p) {
    if (static_cast<int>(p.size()) != inst.n)
        throw SolverError(ErrorKind::OutOfRange,
                          "profile has " + std::to_string(p.size()) + " entries, instance has " +
                              std::to_string(inst.n) + " projects");
    Revenue total = 0;
    for (int j = 0; j < inst.n; ++j) {
        if (p[j] < 0 || p[j] > inst.m)
            throw SolverError(ErrorKind::OutOfRange,
                              "x_" + std::to_string(j) + " = " + std::to_string(p[j]) +
                                  " outside {0.." + std::to_string(inst.m) + "}");
        total += inst.R[j][p[j]];
    }
    return total;
}

}  // namespace effortdist
