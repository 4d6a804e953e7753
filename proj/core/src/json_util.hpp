#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "demoreq/errors.hpp"
#include "demoreq/model.hpp"

namespace demoreq::detail {

inline nlohmann::json parse_json(std::string_view source) {
    try {
        return nlohmann::json::parse(source.begin(), source.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, source.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw SyntaxError("syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + e.what(),
                          line, column);
    }
}

inline std::string join_path(const std::string& base, std::string_view key) {
    return base.empty() ? std::string(key) : base + "." + std::string(key);
}

/// Typed field access that reports failures by document path.
class JsonReader {
public:
    JsonReader(bool lenient, std::vector<Diagnostic>* warnings) : lenient_(lenient), warnings_(warnings) {}

    void check_keys(const nlohmann::json& j, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
        for (const auto& [key, value] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
            const auto where = join_path(path, key);
            if (!lenient_) throw SchemaError(where, "unknown field");
            if (warnings_) {
                warnings_->push_back({Severity::Advisory, DiagnosticCode::UnknownKey, where,
                                      "unknown field ignored"});
            }
        }
    }

    const nlohmann::json& required(const nlohmann::json& j, const std::string& path, std::string_view key) {
        auto it = j.find(key);
        if (it == j.end()) throw SchemaError(join_path(path, key), "missing required field");
        return *it;
    }

    std::string string(const nlohmann::json& j, const std::string& path, std::string_view key) {
        const auto& v = required(j, path, key);
        if (!v.is_string()) throw SchemaError(join_path(path, key), "expected a string");
        return v.get<std::string>();
    }

    std::string id(const nlohmann::json& j, const std::string& path, std::string_view key) {
        auto s = string(j, path, key);
        if (!is_valid_id(s)) throw SchemaError(join_path(path, key), "invalid id '" + s + "'");
        return s;
    }

    int integer(const nlohmann::json& v, const std::string& where) {
        if (!v.is_number_integer()) throw SchemaError(where, "expected an integer");
        return v.get<int>();
    }

    int integer(const nlohmann::json& j, const std::string& path, std::string_view key) {
        return integer(required(j, path, key), join_path(path, key));
    }

    bool boolean(const nlohmann::json& j, const std::string& path, std::string_view key) {
        const auto& v = required(j, path, key);
        if (!v.is_boolean()) throw SchemaError(join_path(path, key), "expected a boolean");
        return v.get<bool>();
    }

    TrlLevel trl(const nlohmann::json& v, const std::string& where) {
        const int n = integer(v, where);
        auto level = TrlLevel::from_int(n);
        if (!level) throw SchemaError(where, "TRL " + std::to_string(n) + " outside 1..9");
        return *level;
    }

    TrlLevel trl(const nlohmann::json& j, const std::string& path, std::string_view key) {
        return trl(required(j, path, key), join_path(path, key));
    }

    std::optional<TrlLevel> optional_trl(const nlohmann::json& j, const std::string& path,
                                         std::string_view key) {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return trl(j, path, key);
    }

    std::optional<bool> optional_bool(const nlohmann::json& j, const std::string& path, std::string_view key) {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return boolean(j, path, key);
    }

    std::optional<std::string> optional_string(const nlohmann::json& j, const std::string& path,
                                               std::string_view key) {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return string(j, path, key);
    }

    template <class F>
    auto enumerated(const nlohmann::json& j, const std::string& path, std::string_view key, F parse) {
        const auto text = string(j, path, key);
        auto value = parse(text);
        if (!value) throw SchemaError(join_path(path, key), "unrecognised value '" + text + "'");
        return *value;
    }

    std::vector<std::string> strings(const nlohmann::json& j, const std::string& path, std::string_view key,
                                     bool required_field) {
        std::vector<std::string> out;
        if (!j.contains(key)) {
            if (required_field) throw SchemaError(join_path(path, key), "missing required field");
            return out;
        }
        const auto& arr = j.at(key);
        const auto where = join_path(path, key);
        if (!arr.is_array()) throw SchemaError(where, "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) {
                throw SchemaError(where + "[" + std::to_string(i) + "]", "expected a string");
            }
            out.push_back(arr[i].get<std::string>());
        }
        return out;
    }

    std::set<std::string> id_set(const nlohmann::json& j, const std::string& path, std::string_view key,
                                 bool required_field) {
        std::set<std::string> out;
        const auto items = strings(j, path, key, required_field);
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!is_valid_id(items[i])) {
                throw SchemaError(join_path(path, key) + "[" + std::to_string(i) + "]",
                                  "invalid id '" + items[i] + "'");
            }
            out.insert(items[i]);
        }
        return out;
    }

private:
    bool lenient_;
    std::vector<Diagnostic>* warnings_;
};

} // namespace demoreq::detail
