#include <algorithm>
#include <initializer_list>

#include <json.hpp>

#include "demoreq/errors.hpp"
#include "demoreq/model.hpp"
#include "json_util.hpp"

namespace demoreq {

namespace {

using nlohmann::json;
using detail::JsonReader;

WorkPackage read_wp(JsonReader& r, const json& j, const std::string& path) {
    r.check_keys(j, path, {"id", "name", "kind", "target_trl", "estimated_trl", "analyzed", "use_cases"});
    WorkPackage wp;
    wp.id = r.id(j, path, "id");
    wp.name = r.string(j, path, "name");
    wp.kind = r.enumerated(j, path, "kind", parse_wp_kind);
    wp.target_trl = r.optional_trl(j, path, "target_trl");
    wp.estimated_trl = r.optional_trl(j, path, "estimated_trl");
    wp.analyzed = r.optional_bool(j, path, "analyzed");
    wp.use_cases = r.id_set(j, path, "use_cases", false);
    return wp;
}

WpDependency read_dependency(JsonReader& r, const json& j, const std::string& path) {
    r.check_keys(j, path, {"from", "to", "kind", "certainty"});
    WpDependency dep;
    dep.from = r.id(j, path, "from");
    dep.to = r.id(j, path, "to");
    dep.kind = r.enumerated(j, path, "kind", parse_dependency_kind);
    if (j.contains("certainty")) dep.certainty = r.enumerated(j, path, "certainty", parse_certainty);
    return dep;
}

UseCase read_use_case(JsonReader& r, const json& j, const std::string& path) {
    r.check_keys(j, path, {"id", "provider", "framework_group", "readiness"});
    UseCase uc;
    uc.id = r.id(j, path, "id");
    uc.provider = r.string(j, path, "provider");
    if (j.contains("framework_group")) uc.framework_group = r.id(j, path, "framework_group");
    if (j.contains("readiness")) uc.readiness = r.enumerated(j, path, "readiness", parse_grade);
    return uc;
}

DemonstratorTarget read_demo(JsonReader& r, const json& j, const std::string& path) {
    r.check_keys(j, path, {"id", "name", "target_trl", "covered_wps", "use_cases", "qualities"});
    DemonstratorTarget demo;
    demo.id = r.id(j, path, "id");
    demo.name = r.string(j, path, "name");
    demo.target_trl = r.optional_trl(j, path, "target_trl");
    demo.covered_wps = r.id_set(j, path, "covered_wps", true);
    demo.use_cases = r.id_set(j, path, "use_cases", true);
    demo.qualities = r.enumerated(j, path, "qualities", parse_qualities);
    return demo;
}

void resolve_references(const ProjectModel& model) {
    for (std::size_t i = 0; i < model.work_packages.size(); ++i) {
        for (const auto& uc : model.work_packages[i].use_cases) {
            if (!model.find_use_case(uc)) {
                throw ReferenceError("work_packages[" + std::to_string(i) + "].use_cases", uc);
            }
        }
    }
    for (std::size_t i = 0; i < model.dependencies.size(); ++i) {
        const auto& dep = model.dependencies[i];
        const auto base = "dependencies[" + std::to_string(i) + "]";
        if (!model.find_wp(dep.from)) throw ReferenceError(base + ".from", dep.from);
        if (!model.find_wp(dep.to)) throw ReferenceError(base + ".to", dep.to);
    }
    for (std::size_t i = 0; i < model.demonstrators.size(); ++i) {
        const auto& demo = model.demonstrators[i];
        const auto base = "demonstrators[" + std::to_string(i) + "]";
        for (const auto& wp : demo.covered_wps) {
            if (!model.find_wp(wp)) throw ReferenceError(base + ".covered_wps", wp);
        }
        for (const auto& uc : demo.use_cases) {
            if (!model.find_use_case(uc)) throw ReferenceError(base + ".use_cases", uc);
        }
    }
}

template <class T, class F>
std::vector<T> read_list(JsonReader& r, const json& root, const char* key, F read_item) {
    std::vector<T> out;
    if (!root.contains(key)) return out;
    const auto& arr = root.at(key);
    if (!arr.is_array()) throw SchemaError(key, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto path = std::string(key) + "[" + std::to_string(i) + "]";
        if (!arr[i].is_object()) throw SchemaError(path, "expected an object");
        out.push_back(read_item(r, arr[i], path));
    }
    return out;
}

} // namespace

ProjectModel parse_model(std::string_view source, const ParseOptions& options,
                         std::vector<Diagnostic>* warnings) {
    const json root = detail::parse_json(source);
    if (!root.is_object()) throw SchemaError("$", "expected an object at top level");

    JsonReader r{options.lenient, warnings};
    r.check_keys(root, "", {"project", "work_packages", "dependencies", "use_cases", "demonstrators"});

    ProjectModel model;
    if (!root.contains("project")) throw SchemaError("project", "missing required field");
    const auto& project = root.at("project");
    if (!project.is_object()) throw SchemaError("project", "expected an object");
    r.check_keys(project, "project", {"name", "blanket_trl_range"});
    model.name = r.string(project, "project", "name");
    if (project.contains("blanket_trl_range")) {
        const auto& range = project.at("blanket_trl_range");
        if (!range.is_array() || range.size() != 2) {
            throw SchemaError("project.blanket_trl_range", "expected [low, high]");
        }
        model.blanket_trl_range = TrlRange{r.trl(range[0], "project.blanket_trl_range[0]"),
                                           r.trl(range[1], "project.blanket_trl_range[1]")};
    }

    if (!root.contains("work_packages")) throw SchemaError("work_packages", "missing required field");
    model.work_packages = read_list<WorkPackage>(r, root, "work_packages", read_wp);
    if (model.work_packages.empty()) {
        throw SchemaError("work_packages", "at least one work package is required");
    }
    model.dependencies = read_list<WpDependency>(r, root, "dependencies", read_dependency);
    model.use_cases = read_list<UseCase>(r, root, "use_cases", read_use_case);
    model.demonstrators = read_list<DemonstratorTarget>(r, root, "demonstrators", read_demo);

    resolve_references(model);
    return model;
}

std::string serialize_model(const ProjectModel& model) {
    using ojson = nlohmann::ordered_json;
    ojson root;
    ojson project;
    project["name"] = model.name;
    if (model.blanket_trl_range) {
        project["blanket_trl_range"] = {model.blanket_trl_range->low.value(),
                                        model.blanket_trl_range->high.value()};
    }
    root["project"] = project;

    auto wps = ojson::array();
    for (const auto& wp : model.work_packages) {
        ojson j;
        j["id"] = wp.id;
        j["name"] = wp.name;
        j["kind"] = to_string(wp.kind);
        if (wp.target_trl) j["target_trl"] = wp.target_trl->value();
        if (wp.estimated_trl) j["estimated_trl"] = wp.estimated_trl->value();
        if (wp.analyzed) j["analyzed"] = *wp.analyzed;
        if (!wp.use_cases.empty()) j["use_cases"] = wp.use_cases;
        wps.push_back(std::move(j));
    }
    root["work_packages"] = std::move(wps);

    auto deps = ojson::array();
    for (const auto& dep : model.dependencies) {
        deps.push_back({{"from", dep.from},
                        {"to", dep.to},
                        {"kind", to_string(dep.kind)},
                        {"certainty", to_string(dep.certainty)}});
    }
    root["dependencies"] = std::move(deps);

    auto ucs = ojson::array();
    for (const auto& uc : model.use_cases) {
        ojson j;
        j["id"] = uc.id;
        j["provider"] = uc.provider;
        if (uc.framework_group) j["framework_group"] = *uc.framework_group;
        if (uc.readiness) j["readiness"] = to_string(*uc.readiness);
        ucs.push_back(std::move(j));
    }
    root["use_cases"] = std::move(ucs);

    auto demos = ojson::array();
    for (const auto& demo : model.demonstrators) {
        ojson j;
        j["id"] = demo.id;
        j["name"] = demo.name;
        if (demo.target_trl) j["target_trl"] = demo.target_trl->value();
        j["covered_wps"] = demo.covered_wps;
        j["use_cases"] = demo.use_cases;
        j["qualities"] = to_string(demo.qualities);
        demos.push_back(std::move(j));
    }
    root["demonstrators"] = std::move(demos);

    return root.dump(2) + "\n";
}

} // namespace demoreq
