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

#ifndef ABDUKIT_ABDUCTION_INTERNAL_HPP
#define ABDUKIT_ABDUCTION_INTERNAL_HPP

#include <vector>

#include "abdukit/abduction.hpp"

namespace abdukit::detail {

Universe observation_constants(const Observation& g);

/// Throws InvalidArgument for a non-ground literal and AbducibleObservation
/// when the literal is an abducible fact.
void check_observation_literal(const AbductiveProgram& ap, const Literal& l, const Limits& limits);
void check_observation(const AbductiveProgram& ap, const Observation& g, const Limits& limits);

/// Deduplicates, tags minimality, optionally drops non-minimal entries and
/// sorts.
std::vector<Explanation> finish(std::vector<Explanation> found, Mode mode, bool minimal_only);

/// Adds `unless <- not g` for a fresh atom `unless`.
AbductiveProgram with_unless(const AbductiveProgram& ap, const Literal& g, Literal& unless);

} // namespace abdukit::detail

#endif
