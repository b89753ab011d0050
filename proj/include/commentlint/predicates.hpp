// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 commentlint contributors

#pragma once

#include <map>
#include <string>

#include "commentlint/comment.hpp"
#include "commentlint/extract.hpp"
#include "commentlint/rules.hpp"

namespace commentlint {

struct EvalContext {
    const Rule& rule;
    const StructuredComment& comment;
    const ClassCommentRecord& record;
};

/// One entry of the fixed predicate registry. Predicates are total over
/// well-formed inputs; `explain` names the triggering token or missing
/// feature when the predicate is false (used as violation evidence).
struct Predicate {
    bool (*test)(const EvalContext&) = nullptr;
    std::string (*explain)(const EvalContext&) = nullptr;
    bool works_without_comment = false;  // evaluable when comment_present == false
    bool works_on_malformed = false;     // evaluable when the parse is malformed
};

/// Name -> predicate. Shared by applicability and followed conditions.
const std::map<std::string, Predicate>& predicate_registry();

bool is_known_predicate(const std::string& name);

/// The imperative-verb lexicon behind the third-person summary heuristic:
/// common documentation verbs in base (imperative) form, lowercase, sorted.
/// A first word matching an entry reads imperative; an entry plus "s"/"es"
/// reads third person; anything else leaves the mood undetermined.
const std::vector<std::string>& imperative_verb_lexicon();

}  // namespace commentlint
