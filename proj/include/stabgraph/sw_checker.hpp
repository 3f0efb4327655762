#pragma once

#include <string>
#include <vector>

#include "stabgraph/coincidence.hpp"

namespace stabgraph {

/// A set of output vertices E subseteq {0..n-1} under arbitrary errors. The
/// input vertices are adjoined automatically by every check.
struct ErrorConfiguration {
    std::vector<int> vertices;  // strictly ascending

    static ErrorConfiguration of(std::vector<int> v);
    std::string label(int k) const;  // e.g. "{5,7}" with 1-based vertex names
};

/// The |I| x |X u E| system Xi^I_{X u E}: one row per integration vertex
/// y* in I = Y \ E (ascending), columns ordered inputs first, then E ascending.
BitMatrix constraint_system(const CoincidenceMatrix& xi, const ErrorConfiguration& e);

/// Strong (sufficient) graph-theoretic detection: the system has only the
/// trivial solution.
bool detect_strong(const CoincidenceMatrix& xi, const ErrorConfiguration& e);

/// Weak (necessary and sufficient) detection: every solution that also
/// satisfies d^X = 0 and Xi^X_E d^E = 0 is trivial. Implemented by stacking
/// the wc1 constraints as extra rows and running one rank test.
bool detect_weak(const CoincidenceMatrix& xi, const ErrorConfiguration& e);

enum class Mode { strong, weak };

struct ConfigVerdict {
    ErrorConfiguration config;
    bool strong = false;
    bool weak = false;

    bool detected(Mode m) const { return m == Mode::strong ? strong : weak; }
};

struct DetectionReport {
    Mode mode = Mode::strong;
    int requested_e = 0;
    std::vector<ConfigVerdict> per_config;  // by size, lexicographic
    int corrects_e = 0;  // maximal e' <= requested with all |E| <= 2e' detected
    bool all_detected = false;

    std::string table() const;
};

/// Evaluates every configuration with |E| <= 2e, including E = empty (the
/// isometry / zero-error check). Configurations are independent; `threads`
/// splits them across workers with a deterministic result.
DetectionReport verify_correction(const CoincidenceMatrix& xi, int e, Mode mode,
                                  int threads = 1);

}  // namespace stabgraph
