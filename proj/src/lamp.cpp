/*
   Copyright 2026 The lampfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>

#include "lampfield/lampring.hpp"

namespace lampfield {

LampState::LampState(std::vector<bool> lamps, std::size_t cursor)
    : lamps_(std::move(lamps)), cursor_(cursor), lit_(0) {
    if (lamps_.size() < 2) throw std::invalid_argument("LampState: need at least two lamps");
    if (cursor_ >= lamps_.size()) throw std::invalid_argument("LampState: cursor out of range");
    lit_ = static_cast<std::size_t>(std::count(lamps_.begin(), lamps_.end(), true));
}

LampState LampState::all_on(std::size_t n) { return {std::vector<bool>(n, true), 0}; }

void LampState::advance() noexcept {
    const std::size_t n = lamps_.size();
    const std::size_t prev = cursor_ == 0 ? n - 1 : cursor_ - 1;
    if (lamps_[prev]) {
        const bool was = lamps_[cursor_];
        lamps_[cursor_] = !was;
        if (was)
            --lit_;
        else
            ++lit_;
    }
    cursor_ = cursor_ + 1 == n ? 0 : cursor_ + 1;
}

LampState lamp_step(LampState s) {
    s.advance();
    return s;
}

std::optional<Natural> lamp_period(std::size_t n, std::uint64_t cap) {
    LampState s = LampState::all_on(n);
    for (std::uint64_t t = 1; t <= cap; ++t) {
        s.advance();
        if (s.all_lit()) return Natural(t);
    }
    return std::nullopt;
}

}  // namespace lampfield
