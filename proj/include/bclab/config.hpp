#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bclab/automorphic.hpp"

namespace bclab {

inline constexpr std::string_view kArtifactVersion = "bclab 1.0.0";

/// Malformed configuration; line() is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct FieldSpec {
    u64 modulus = 1;
    std::vector<i64> gens;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct CharSpec {
    std::optional<u64> modulus;    ///< must match the field modulus when given
    std::vector<i64> exponents;    ///< empty: trivial character
    double tau = 0.0;
    unsigned rank = 1;
    friend bool operator==(const CharSpec&, const CharSpec&) = default;
};

/// Flat key=value experiment description; repeated keys build lists.
///
///   E.modulus, E.gen*          field E
///   F.modulus, F.gen*          field F (defaults to E)
///   pi.char*, pi.tau           pi = base change to E of the character mod E.modulus
///   pi.modulus, pi.rank        optional consistency data
///   piprime.*                  same for pi' over F
///   limit, checkpoint*, chunk  psi sum range
///   out, csv                   output paths
struct ExperimentConfig {
    FieldSpec e;
    std::optional<FieldSpec> f;
    CharSpec pi;
    CharSpec pi_prime;
    std::optional<u64> limit;
    std::vector<u64> checkpoints;
    std::optional<u64> chunk;
    std::string out;
    std::string csv;

    static ExperimentConfig parse(std::string_view text);
    static ExperimentConfig load(const std::string& path);
    /// Canonical text form; parse(to_text()) reproduces the config.
    std::string to_text() const;
    /// FNV-1a 64 of the canonical text, as 16 hex digits.
    std::string hash() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct Experiment {
    AbelianField e;
    AbelianField f;
    GalHeckeChar pi;
    GalHeckeChar pi_prime;
};

/// Builds the fields and characters; throws ConfigError with the offending moduli.
Experiment build_experiment(const ExperimentConfig& config);

/// Parses counts such as "10000000" or "1e7"; throws std::invalid_argument.
u64 parse_count(std::string_view text);

/// FNV-1a 64 of the bytes, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Shortest round-trip decimal form.
std::string format_double(double x);

} // namespace bclab
