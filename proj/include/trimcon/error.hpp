#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trimcon {

// Raised when an operation is handed arguments that violate its contract:
// out-of-range nodes, malformed partitions, degenerate degrees, bad files.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Diagnostic {
    enum class Level { error, warning };
    Level level = Level::error;
    std::string message;
};

// Raised by the simulation engine when a configuration fails validation.
// Carries the full diagnostic list (errors and warnings) so callers can show
// everything at once instead of fixing problems one at a time.
class ConfigError : public DomainError {
public:
    explicit ConfigError(std::vector<Diagnostic> diagnostics)
        : DomainError(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;

    static std::string join(const std::vector<Diagnostic>& ds) {
        std::string out = "invalid simulation config:";
        for (const auto& d : ds) {
            out += "\n  ";
            out += d.level == Diagnostic::Level::error ? "error: " : "warning: ";
            out += d.message;
        }
        return out;
    }
};

}  // namespace trimcon
