#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hapsnet
{

/// Raised when an argument lies outside the domain of a model
/// (non-positive distance, negative variance, mismatched dimensions).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Configuration rejected. Carries every violated invariant, not only the first.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)),
          issues_(std::move(issues))
    {
    }

    const std::vector<std::string>& issues() const noexcept { return issues_; }

  private:
    static std::string join(const std::vector<std::string>& issues)
    {
        std::string out = "invalid configuration:";
        for (const auto& s : issues)
            out += "\n  - " + s;
        return out;
    }

    std::vector<std::string> issues_;
};

inline void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

} // namespace hapsnet
