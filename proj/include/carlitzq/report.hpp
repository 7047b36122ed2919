// Copyright 2026 the carlitzq authors
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

#ifndef CARLITZQ_REPORT_HPP
#define CARLITZQ_REPORT_HPP

#include <string>
#include <vector>

namespace carlitzq {

/// One checked identity instance. `info` entries carry observations that
/// are recorded but not asserted (they never fail a report).
struct CheckItem {
    std::string name;
    bool pass = false;
    bool info = false;
    std::string detail;
};

/// Outcome of a verification run: a flat, deterministic list of items.
struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string detail = std::string()) {
        items.push_back({std::move(name), pass, false, std::move(detail)});
    }
    void note(std::string name, std::string detail) {
        items.push_back({std::move(name), true, true, std::move(detail)});
    }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    bool ok() const {
        for (const auto& item : items)
            if (!item.info && !item.pass) return false;
        return true;
    }
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& item : items)
            if (!item.info && !item.pass) ++n;
        return n;
    }
    std::size_t checked() const {
        std::size_t n = 0;
        for (const auto& item : items)
            if (!item.info) ++n;
        return n;
    }
};

} // namespace carlitzq

#endif // CARLITZQ_REPORT_HPP
