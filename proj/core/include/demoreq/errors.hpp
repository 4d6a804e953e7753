#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace demoreq {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed model/config document.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Unknown field, wrong type, or out-of-range value; `path()` names the field.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Dangling WP / use-case reference.
class ReferenceError : public Error {
public:
    ReferenceError(std::string path, std::string target)
        : Error(path + ": unknown reference '" + target + "'"),
          path_(std::move(path)), target_(std::move(target)) {}
    const std::string& path() const noexcept { return path_; }
    const std::string& target() const noexcept { return target_; }

private:
    std::string path_;
    std::string target_;
};

/// Analyzed WPs lacking a target or estimated TRL.
class IncompleteInput : public Error {
public:
    explicit IncompleteInput(std::vector<std::string> wp_ids);
    const std::vector<std::string>& wp_ids() const noexcept { return wp_ids_; }

private:
    std::vector<std::string> wp_ids_;
};

class CyclicDependency : public Error {
public:
    explicit CyclicDependency(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

class MissingEstimate : public Error {
public:
    explicit MissingEstimate(std::string wp_id)
        : Error("no estimated TRL for " + wp_id), wp_id_(std::move(wp_id)) {}
    const std::string& wp_id() const noexcept { return wp_id_; }

private:
    std::string wp_id_;
};

class UnknownWp : public Error {
public:
    explicit UnknownWp(std::string wp_id)
        : Error("work package not in adjusted TRL map: " + wp_id), wp_id_(std::move(wp_id)) {}
    const std::string& wp_id() const noexcept { return wp_id_; }

private:
    std::string wp_id_;
};

class NoUseCase : public Error {
public:
    explicit NoUseCase(const std::string& demo_id)
        : Error("demonstrator " + demo_id + " references no use-case") {}
};

class ValidationFailed : public Error {
public:
    explicit ValidationFailed(std::vector<std::string> messages);
    const std::vector<std::string>& messages() const noexcept { return messages_; }

private:
    std::vector<std::string> messages_;
};

class IterationLimitExceeded : public Error {
public:
    explicit IterationLimitExceeded(int limit)
        : Error("feedback re-runs exceed max_feedback_iterations=" + std::to_string(limit)),
          limit_(limit) {}
    int limit() const noexcept { return limit_; }

private:
    int limit_;
};

class ProjectMismatch : public Error {
public:
    ProjectMismatch(const std::string& a, const std::string& b)
        : Error("cannot diff reports of different projects: '" + a + "' vs '" + b + "'") {}
};

/// Malformed or unresolvable `--set` override.
class OverrideError : public Error {
public:
    using Error::Error;
};

} // namespace demoreq
