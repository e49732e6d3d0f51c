// Copyright 2026 The Discern Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "discern/logic/term.hpp"
#include "discern/scene/geometry.hpp"

namespace discern::scene {

/// `[p(X1,Y1), p(X2,Y2), ...]`
inline logic::Term path_to_term(const Path& path) {
    std::vector<logic::Term> pts;
    pts.reserve(path.points.size());
    for (const auto& p : path.points) {
        pts.push_back(logic::Term::compound("p", {logic::Term::number(p.x), logic::Term::number(p.y)}));
    }
    return logic::Term::sequence(std::move(pts));
}

/// Accepts `[p(X,Y), ...]` or `[[X,Y], ...]`; nullopt if malformed.
inline std::optional<Path> term_to_path(const logic::Term& t) {
    if (!t.is_sequence() || t.tail()) return std::nullopt;
    Path path;
    for (const auto& item : t.args()) {
        std::span<const logic::Term> xy;
        if (item.is_compound() && item.name() == "p" && item.arity() == 2) {
            xy = item.args();
        } else if (item.is_sequence() && !item.tail() && item.args().size() == 2) {
            xy = item.args();
        } else {
            return std::nullopt;
        }
        if (!xy[0].is_number() || !xy[1].is_number()) return std::nullopt;
        path.points.push_back({xy[0].as_double(), xy[1].as_double()});
    }
    return path;
}

}  // namespace discern::scene
