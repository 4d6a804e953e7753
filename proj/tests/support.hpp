#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "demoreq/model.hpp"

namespace demoreq::test {

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string corpus_path(const std::string& name) { return std::string(DEMOREQ_CORPUS_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(DEMOREQ_GOLDEN_DIR) + "/" + name; }

inline ProjectModel load_corpus(const std::string& name) { return parse_model(read_text(corpus_path(name))); }

inline WorkPackage wp(std::string id, std::optional<int> estimate = std::nullopt,
                      std::optional<int> target = std::nullopt, std::set<std::string> use_cases = {}) {
    WorkPackage w;
    w.id = id;
    w.name = "Package " + id;
    if (estimate) w.estimated_trl = TrlLevel(*estimate);
    if (target) w.target_trl = TrlLevel(*target);
    w.use_cases = std::move(use_cases);
    return w;
}

inline WpDependency dep(std::string from, std::string to, Certainty certainty = Certainty::Direct,
                        DependencyKind kind = DependencyKind::Data) {
    return {std::move(from), std::move(to), kind, certainty};
}

inline UseCase use_case(std::string id, std::optional<ReadinessGrade> grade = std::nullopt,
                        std::optional<std::string> group = std::nullopt) {
    return {id, id, std::move(group), grade};
}

inline DemonstratorTarget demo(std::string id, std::set<std::string> wps, std::set<std::string> use_cases,
                               std::optional<int> target = std::nullopt,
                               Qualities qualities = Qualities::FunctionalOnly) {
    DemonstratorTarget d;
    d.id = id;
    d.name = "Demo " + id;
    if (target) d.target_trl = TrlLevel(*target);
    d.covered_wps = std::move(wps);
    d.use_cases = std::move(use_cases);
    d.qualities = qualities;
    return d;
}

} // namespace demoreq::test
