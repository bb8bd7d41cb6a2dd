/*
 *  Copyright (C) 2026  The abdukit authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

// Direct enumeration of (E, F) pairs against the definitions. Shares nothing
// with the update-program route beyond grounding and the solver.

#include <algorithm>

#include "abduction_internal.hpp"

namespace abdukit {

namespace {

bool holds(const AnswerSetResult& result, const Observation& g, Mode mode)
{
    const auto& sets = result.sets;
    auto has_g = [&](const Interpretation& s) { return s.contains(g.literal); };
    auto lacks_g = [&](const Interpretation& s) { return !s.contains(g.literal); };
    switch (g.kind) {
    case Observation::Kind::Positive:
        return mode == Mode::Skeptical ? std::all_of(sets.begin(), sets.end(), has_g)
                                       : std::any_of(sets.begin(), sets.end(), has_g);
    case Observation::Kind::Negative:
        return mode == Mode::Skeptical ? std::all_of(sets.begin(), sets.end(), lacks_g)
                                       : std::any_of(sets.begin(), sets.end(), lacks_g);
    case Observation::Kind::Bot:
        return true;
    }
    return false;
}

} // namespace

std::vector<Explanation> brute_force_explanations(const AbductiveProgram& ap, const Observation& g, Mode mode,
                                                  bool minimal, const Options& options)
{
    if (g.kind == Observation::Kind::Bot && mode == Mode::Skeptical)
        throw Error(ErrorCode::SkepticalBotUnsupported,
                    "skeptical anti-explanations of Bot are not defined; use credulous mode");
    detail::check_observation(ap, g, options.limits);

    auto u = constants(ap.program);
    u.merge(constants(ap.abducibles));
    u.merge(detail::observation_constants(g));
    const auto src = establish_disjunctive_fact_assumption(
        {ground(ap.program, u, options.limits), ground(ap.abducibles, u, options.limits)});

    std::vector<Rule> addable, removable;
    for (const auto& r : src.abducibles)
        (src.program.contains(r) ? removable : addable).push_back(r);
    if (addable.size() + removable.size() > options.oracle_cap)
        throw Error(ErrorCode::OracleBudgetExceeded,
                    std::to_string(addable.size() + removable.size()) +
                        " ground abducibles exceed the oracle cap of " + std::to_string(options.oracle_cap));

    std::vector<Explanation> found;
    for (std::uint32_t e = 0; e < (std::uint32_t{1} << addable.size()); ++e) {
        for (std::uint32_t f = 0; f < (std::uint32_t{1} << removable.size()); ++f) {
            Explanation x;
            Program p = src.program;
            for (std::size_t i = 0; i < removable.size(); ++i)
                if ((f >> i) & 1U) {
                    p.erase(removable[i]);
                    x.remove.insert(removable[i]);
                }
            for (std::size_t i = 0; i < addable.size(); ++i)
                if ((e >> i) & 1U) {
                    p.insert(addable[i]);
                    x.add.insert(addable[i]);
                }
            const auto result = answer_sets(p, options.limits);
            if (result.consistent() && holds(result, g, mode))
                found.push_back(std::move(x));
        }
    }
    return detail::finish(std::move(found), mode, minimal);
}

} // namespace abdukit
