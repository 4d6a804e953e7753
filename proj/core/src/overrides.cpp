#include <algorithm>
#include <charconv>
#include <functional>

#include "demoreq/engine.hpp"
#include "demoreq/errors.hpp"

namespace demoreq {

namespace {

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    while (!value.empty()) {
        const auto comma = value.find(',');
        auto item = value.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
    }
    return out;
}

std::optional<TrlLevel> parse_trl_value(const Override& o) {
    if (o.value.empty() || o.value == "none") return std::nullopt;
    int n = 0;
    const auto* end = o.value.data() + o.value.size();
    auto [ptr, ec] = std::from_chars(o.value.data(), end, n);
    auto level = ec == std::errc{} && ptr == end ? TrlLevel::from_int(n) : std::nullopt;
    if (!level) throw OverrideError(o.text() + ": '" + o.value + "' is not a TRL in 1..9");
    return level;
}

template <class E, class F>
E parse_enum_value(const Override& o, F parse) {
    auto v = parse(o.value);
    if (!v) throw OverrideError(o.text() + ": unrecognised value '" + o.value + "'");
    return *v;
}

void require_set_op(const Override& o) {
    if (o.op != OverrideOp::Set) throw OverrideError(o.text() + ": " + o.field + " only supports '='");
}

void apply_set_field(std::set<std::string>& field, const Override& o,
                     const std::function<bool(const std::string&)>& exists) {
    const auto items = split_list(o.value);
    for (const auto& item : items) {
        if (!exists(item)) throw OverrideError(o.text() + ": unknown reference '" + item + "'");
    }
    switch (o.op) {
    case OverrideOp::Set: field = {items.begin(), items.end()}; break;
    case OverrideOp::Add: field.insert(items.begin(), items.end()); break;
    case OverrideOp::Remove:
        for (const auto& item : items) field.erase(item);
        break;
    }
}

} // namespace

std::string Override::text() const {
    return target + "." + id + "." + field + std::string(to_string(op)) + value;
}

Override parse_override(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw OverrideError("override '" + std::string(text) + "' has no '=', '+=' or '-='");
    }
    Override o;
    auto path_end = eq;
    if (text[eq - 1] == '+') {
        o.op = OverrideOp::Add;
        --path_end;
    } else if (text[eq - 1] == '-') {
        o.op = OverrideOp::Remove;
        --path_end;
    }
    const auto path = text.substr(0, path_end);
    o.value = std::string(text.substr(eq + 1));

    const auto first = path.find('.');
    const auto last = path.rfind('.');
    if (first == std::string_view::npos || first == last) {
        throw OverrideError("override path '" + std::string(path) + "' must be <target>.<id>.<field>");
    }
    o.target = std::string(path.substr(0, first));
    o.id = std::string(path.substr(first + 1, last - first - 1));
    o.field = std::string(path.substr(last + 1));
    if (o.target != "wp" && o.target != "use_case" && o.target != "demo") {
        throw OverrideError("override target '" + o.target + "' must be wp, use_case or demo");
    }
    if (!is_valid_id(o.id)) throw OverrideError("override id '" + o.id + "' is not a valid id");
    if (o.field.empty()) throw OverrideError("override '" + std::string(text) + "' names no field");
    return o;
}

ProjectModel apply_overrides(ProjectModel model, std::span<const Override> overrides) {
    const auto wp_exists = [&](const std::string& id) { return model.find_wp(id) != nullptr; };
    const auto uc_exists = [&](const std::string& id) { return model.find_use_case(id) != nullptr; };

    for (const auto& o : overrides) {
        if (o.target == "wp") {
            auto* wp = model.find_wp(o.id);
            if (!wp) throw OverrideError(o.text() + ": unknown work package '" + o.id + "'");
            if (o.field == "use_cases") {
                apply_set_field(wp->use_cases, o, uc_exists);
                continue;
            }
            require_set_op(o);
            if (o.field == "name") {
                wp->name = o.value;
            } else if (o.field == "kind") {
                wp->kind = parse_enum_value<WpKind>(o, parse_wp_kind);
            } else if (o.field == "target_trl") {
                wp->target_trl = parse_trl_value(o);
            } else if (o.field == "estimated_trl") {
                wp->estimated_trl = parse_trl_value(o);
            } else if (o.field == "analyzed") {
                if (o.value == "true") {
                    wp->analyzed = true;
                } else if (o.value == "false") {
                    wp->analyzed = false;
                } else if (o.value.empty() || o.value == "none") {
                    wp->analyzed.reset();
                } else {
                    throw OverrideError(o.text() + ": expected true or false");
                }
            } else {
                throw OverrideError(o.text() + ": unknown work package field '" + o.field + "'");
            }
        } else if (o.target == "use_case") {
            auto* uc = model.find_use_case(o.id);
            if (!uc) throw OverrideError(o.text() + ": unknown use-case '" + o.id + "'");
            require_set_op(o);
            if (o.field == "provider") {
                uc->provider = o.value;
            } else if (o.field == "framework_group") {
                if (o.value.empty() || o.value == "none") {
                    uc->framework_group.reset();
                } else if (is_valid_id(o.value)) {
                    uc->framework_group = o.value;
                } else {
                    throw OverrideError(o.text() + ": invalid framework group");
                }
            } else if (o.field == "readiness") {
                if (o.value.empty() || o.value == "none") {
                    uc->readiness.reset();
                } else {
                    uc->readiness = parse_enum_value<ReadinessGrade>(o, parse_grade);
                }
            } else {
                throw OverrideError(o.text() + ": unknown use-case field '" + o.field + "'");
            }
        } else {
            auto* demo = model.find_demonstrator(o.id);
            if (!demo) throw OverrideError(o.text() + ": unknown demonstrator '" + o.id + "'");
            if (o.field == "covered_wps") {
                apply_set_field(demo->covered_wps, o, wp_exists);
                continue;
            }
            if (o.field == "use_cases") {
                apply_set_field(demo->use_cases, o, uc_exists);
                continue;
            }
            require_set_op(o);
            if (o.field == "name") {
                demo->name = o.value;
            } else if (o.field == "target_trl") {
                demo->target_trl = parse_trl_value(o);
            } else if (o.field == "qualities") {
                demo->qualities = parse_enum_value<Qualities>(o, parse_qualities);
            } else {
                throw OverrideError(o.text() + ": unknown demonstrator field '" + o.field + "'");
            }
        }
    }
    return model;
}

} // namespace demoreq
