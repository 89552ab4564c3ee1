#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nlosc/chain.hpp"
#include "nlosc/ivp.hpp"
#include "nlosc/verify.hpp"

namespace nlosc {

/// Invalid run configuration. path() names the offending field, e.g.
/// "omegas[1]".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

enum class Mode { Chain, Ivp };

/// A parsed JSON run description. In chain mode `ivp` is the reduced
/// problem of `chain`.
struct RunConfig {
    Mode mode = Mode::Ivp;
    std::optional<OscillatorChain> chain;
    HighOrderIVP ivp;
    std::string method;             ///< standard4, improved4, spline6 or oracle
    std::optional<Method> weights;  ///< unset for the oracle
    nlohmann::json set;             ///< the "set" field as given (null if absent)
    int n = 0;
    std::optional<Expression> exact;
};

/// Validates and converts a JSON config. Throws ConfigError.
RunConfig parse_config(const nlohmann::json& j);

/// Reads and parses a config file. Throws ConfigError (path "<file>") for
/// unreadable or malformed JSON.
RunConfig load_config(const std::string& file);

/// The reduced IVP of a config as an ivp-mode config that parse_config
/// accepts; method, set, n and exact are carried over.
nlohmann::json reduced_config(const RunConfig& cfg);

}  // namespace nlosc
