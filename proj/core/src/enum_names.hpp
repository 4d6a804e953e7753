#pragma once

// Name tables shared by to_string(), the model parser and the report codec.

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "demoreq/engine.hpp"
#include "demoreq/feasibility.hpp"
#include "demoreq/model.hpp"
#include "demoreq/quality.hpp"
#include "demoreq/requirements.hpp"
#include "demoreq/trl.hpp"

namespace demoreq::detail {

template <class E>
using NameTable = std::span<const std::pair<E, std::string_view>>;

template <class E>
NameTable<E> names();

template <> NameTable<WpKind> names<WpKind>();
template <> NameTable<DependencyKind> names<DependencyKind>();
template <> NameTable<Certainty> names<Certainty>();
template <> NameTable<ReadinessGrade> names<ReadinessGrade>();
template <> NameTable<Qualities> names<Qualities>();
template <> NameTable<Severity> names<Severity>();
template <> NameTable<DiagnosticCode> names<DiagnosticCode>();
template <> NameTable<SubjectKind> names<SubjectKind>();
template <> NameTable<MissingIssue> names<MissingIssue>();
template <> NameTable<GapCategory> names<GapCategory>();
template <> NameTable<ComplianceFailure> names<ComplianceFailure>();
template <> NameTable<DemonstrationLevel> names<DemonstrationLevel>();
template <> NameTable<UseCaseType> names<UseCaseType>();
template <> NameTable<RiskLevel> names<RiskLevel>();
template <> NameTable<MitigationKind> names<MitigationKind>();
template <> NameTable<ConstraintCode> names<ConstraintCode>();
template <> NameTable<RequirementKind> names<RequirementKind>();
template <> NameTable<RequirementSource> names<RequirementSource>();
template <> NameTable<OverrideOp> names<OverrideOp>();

template <class E>
std::string_view enum_name(E value) {
    for (const auto& [e, name] : names<E>()) {
        if (e == value) return name;
    }
    return "?";
}

template <class E>
std::optional<E> enum_parse(std::string_view text) {
    for (const auto& [e, name] : names<E>()) {
        if (name == text) return e;
    }
    return std::nullopt;
}

} // namespace demoreq::detail
