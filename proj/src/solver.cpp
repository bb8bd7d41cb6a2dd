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

#include "abdukit/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace abdukit {

// ---------------------------------------------------------------------------
// Interpretation
// ---------------------------------------------------------------------------

Interpretation::Interpretation(std::set<Literal> literals) : literals_(std::move(literals)) {}

Interpretation Interpretation::contradictory()
{
    Interpretation s;
    s.contradictory_ = true;
    return s;
}

bool Interpretation::contains(const Literal& l) const
{
    return contradictory_ || literals_.count(l) > 0;
}

Interpretation Interpretation::without_reserved() const
{
    if (contradictory_)
        return *this;
    std::set<Literal> out;
    for (const auto& l : literals_)
        if (!l.is_reserved())
            out.insert(l);
    return Interpretation(std::move(out));
}

std::string Interpretation::to_string() const
{
    if (contradictory_)
        return "L_P";
    std::string out = "{";
    bool first = true;
    for (const auto& l : literals_) {
        out += first ? "" : ", ";
        out += abdukit::to_string(l);
        first = false;
    }
    return out + "}";
}

std::strong_ordering operator<=>(const Interpretation& a, const Interpretation& b)
{
    if (auto c = a.contradictory_ <=> b.contradictory_; c != 0)
        return c;
    if (auto c = a.literals_.size() <=> b.literals_.size(); c != 0)
        return c;
    return a.literals_ <=> b.literals_;
}

bool AnswerSetResult::consistent() const
{
    return std::any_of(sets.begin(), sets.end(),
                       [](const Interpretation& s) { return !s.is_contradictory(); });
}

AnswerSetResult make_result(std::vector<Interpretation> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    AnswerSetResult r;
    r.contains_contradictory = std::any_of(sets.begin(), sets.end(),
                                           [](const Interpretation& s) { return s.is_contradictory(); });
    r.sets = std::move(sets);
    return r;
}

// ---------------------------------------------------------------------------
// Satisfaction and reduct
// ---------------------------------------------------------------------------

namespace {

void require_ground(const Rule& r)
{
    if (!r.is_ground() || r.has_builtins())
        throw Error(ErrorCode::NonGroundRule,
                    "expected a ground rule without comparisons: " + to_string(r));
}

} // namespace

bool satisfies(const Interpretation& s, const Rule& r)
{
    require_ground(r);
    if (s.is_contradictory())
        return true;
    for (const auto& l : r.positive_body())
        if (!s.contains(l))
            return true;
    for (const auto& l : r.negative_body())
        if (s.contains(l))
            return true;
    return std::any_of(r.head().begin(), r.head().end(),
                       [&](const Literal& h) { return s.contains(h); });
}

Program reduct(const Program& p, const Interpretation& s)
{
    Program out;
    for (const auto& r : p) {
        require_ground(r);
        const auto neg = r.negative_body();
        if (std::any_of(neg.begin(), neg.end(), [&](const Literal& l) { return s.contains(l); }))
            continue;
        std::vector<BodyElement> body;
        for (const auto& l : r.positive_body())
            body.push_back(BodyLiteral{l, false});
        out.insert(Rule(r.head(), std::move(body)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Compiled ground program
// ---------------------------------------------------------------------------

namespace {

struct CompiledRule {
    std::vector<int> head;
    std::vector<int> pos;
    std::vector<int> neg;
};

struct Compiled {
    std::vector<Literal> literals;
    std::map<Literal, int> index;
    std::vector<int> complement;
    std::vector<char> in_head;
    std::vector<CompiledRule> rules;

    int intern(const Literal& l)
    {
        auto [it, fresh] = index.emplace(l, static_cast<int>(literals.size()));
        if (fresh)
            literals.push_back(l);
        return it->second;
    }

    explicit Compiled(const Program& p)
    {
        for (const auto& r : p) {
            require_ground(r);
            CompiledRule cr;
            for (const auto& l : r.head())
                cr.head.push_back(intern(l));
            for (const auto& l : r.positive_body())
                cr.pos.push_back(intern(l));
            for (const auto& l : r.negative_body())
                cr.neg.push_back(intern(l));
            rules.push_back(std::move(cr));
        }
        complement.assign(literals.size(), -1);
        for (std::size_t i = 0; i < literals.size(); ++i) {
            auto it = index.find(literals[i].complement());
            if (it != index.end())
                complement[i] = it->second;
        }
        in_head.assign(literals.size(), 0);
        for (const auto& r : rules)
            for (int h : r.head)
                in_head[h] = 1;
    }

    Interpretation to_interpretation(const std::vector<int>& ids) const
    {
        std::set<Literal> s;
        for (int id : ids)
            s.insert(literals[id]);
        return Interpretation(std::move(s));
    }
};

/// Enumerates the consistent minimal models of a not-free program given as a
/// subset of compiled rules. Literals flagged in `forbidden` may not be
/// derived; models containing one are pruned together with their supersets.
class MinimalModels {
public:
    MinimalModels(const Compiled& c, std::vector<const CompiledRule*> rules,
                  const std::vector<char>& forbidden)
        : c_(c), rules_(std::move(rules)), forbidden_(forbidden) {}

    /// Stops after the first model when `first_only` is set (the result is
    /// then a model but not necessarily minimal).
    std::vector<std::vector<int>> run(bool first_only = false)
    {
        first_only_ = first_only;
        std::vector<char> m(c_.literals.size(), 0);
        search(m);
        if (first_only_)
            return found_;
        return minimal_only(found_);
    }

private:
    static bool subset(const std::vector<int>& a, const std::vector<int>& b)
    {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    static std::vector<std::vector<int>> minimal_only(std::vector<std::vector<int>> models)
    {
        std::sort(models.begin(), models.end());
        models.erase(std::unique(models.begin(), models.end()), models.end());
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < models.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < models.size() && minimal; ++j)
                if (i != j && models[j].size() < models[i].size() && subset(models[j], models[i]))
                    minimal = false;
            if (minimal)
                out.push_back(models[i]);
        }
        return out;
    }

    bool body_holds(const CompiledRule& r, const std::vector<char>& m) const
    {
        return std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return m[l]; });
    }

    bool add(int l, std::vector<char>& m) const
    {
        if (forbidden_[l])
            return false;
        if (c_.complement[l] >= 0 && m[c_.complement[l]])
            return false;
        m[l] = 1;
        return true;
    }

    // Fires single-head rules to a fixpoint. False on a constraint violation,
    // a forbidden literal or a complementary pair.
    bool close(std::vector<char>& m) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto* r : rules_) {
                if (r->head.size() > 1 || !body_holds(*r, m))
                    continue;
                if (r->head.empty())
                    return false;
                const int h = r->head.front();
                if (!m[h]) {
                    if (!add(h, m))
                        return false;
                    changed = true;
                }
            }
        }
        return true;
    }

    void search(std::vector<char>& m)
    {
        if (first_only_ && !found_.empty())
            return;
        if (!close(m))
            return;
        for (const auto* r : rules_) {
            if (r->head.size() < 2 || !body_holds(*r, m))
                continue;
            if (std::any_of(r->head.begin(), r->head.end(), [&](int h) { return m[h]; }))
                continue;
            for (int h : r->head) {
                auto next = m;
                if (add(h, next))
                    search(next);
            }
            return;
        }
        std::vector<int> model;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                model.push_back(static_cast<int>(i));
        found_.push_back(std::move(model));
    }

    const Compiled& c_;
    std::vector<const CompiledRule*> rules_;
    const std::vector<char>& forbidden_;
    std::vector<std::vector<int>> found_;
    bool first_only_ = false;
};

// L_P is an answer set iff the not-free part has no constraint and no
// consistent model.
bool contradictory_is_answer_set(const Compiled& c)
{
    std::vector<const CompiledRule*> naf_free;
    for (const auto& r : c.rules) {
        if (!r.neg.empty())
            continue;
        if (r.head.empty())
            return false;
        naf_free.push_back(&r);
    }
    const std::vector<char> none(c.literals.size(), 0);
    return MinimalModels(c, std::move(naf_free), none).run(true).empty();
}

/// Guesses the truth of every head literal that occurs under negation as
/// failure, pruning partial guesses with a lower bound (definite
/// consequences) and an upper bound (possibly derivable literals), then
/// checks stability at the leaves.
class GuessSearch {
public:
    GuessSearch(const Compiled& c, const Limits& limits) : c_(c)
    {
        std::vector<char> under_naf(c.literals.size(), 0);
        for (const auto& r : c.rules)
            for (int l : r.neg)
                under_naf[l] = 1;
        for (std::size_t i = 0; i < c.literals.size(); ++i)
            if (under_naf[i] && c.in_head[i])
                guess_.push_back(static_cast<int>(i));
        if (guess_.size() > limits.max_universe)
            throw Error(ErrorCode::CandidateBudgetExceeded,
                        "answer-set search needs " + std::to_string(guess_.size()) +
                            " guessed literals (limit " + std::to_string(limits.max_universe) + ")");
        // Literals never derivable are fixed to false.
        value_.assign(c.literals.size(), kUnset);
        for (std::size_t i = 0; i < c.literals.size(); ++i)
            if (!c.in_head[i])
                value_[i] = 0;
    }

    std::vector<std::vector<int>> run()
    {
        descend(0);
        return std::move(results_);
    }

private:
    static constexpr std::int8_t kUnset = -1;

    bool neg_false(const CompiledRule& r) const
    {
        return std::all_of(r.neg.begin(), r.neg.end(), [&](int l) { return value_[l] == 0; });
    }

    bool blocked(const CompiledRule& r) const
    {
        return std::any_of(r.neg.begin(), r.neg.end(), [&](int l) { return value_[l] == 1; });
    }

    // Returns false when no completion of the current partial guess can
    // yield a consistent answer set.
    bool feasible(std::vector<char>& lower) const
    {
        const auto n = c_.literals.size();
        lower.assign(n, 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : c_.rules) {
                if (r.head.size() != 1 || lower[r.head.front()] || !neg_false(r))
                    continue;
                if (std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return lower[l]; })) {
                    lower[r.head.front()] = 1;
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!lower[i])
                continue;
            if (value_[i] == 0)
                return false;
            if (c_.complement[i] >= 0 && lower[c_.complement[i]])
                return false;
        }
        for (const auto& r : c_.rules)
            if (r.head.empty() && neg_false(r) &&
                std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return lower[l]; }))
                return false;

        std::vector<char> upper(n, 0);
        changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : c_.rules) {
                if (blocked(r) || !std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return upper[l]; }))
                    continue;
                for (int h : r.head)
                    if (!upper[h] && value_[h] != 0) {
                        upper[h] = 1;
                        changed = true;
                    }
            }
        }
        for (int g : guess_)
            if (value_[g] == 1 && !upper[g])
                return false;
        return true;
    }

    void descend(std::size_t depth)
    {
        std::vector<char> lower;
        if (!feasible(lower))
            return;
        if (depth == guess_.size()) {
            leaf();
            return;
        }
        const int g = guess_[depth];
        if (lower[g]) {
            value_[g] = 1;
            descend(depth + 1);
        } else {
            for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
                value_[g] = v;
                descend(depth + 1);
            }
        }
        value_[g] = kUnset;
    }

    void leaf()
    {
        std::vector<const CompiledRule*> reduct;
        for (const auto& r : c_.rules)
            if (neg_false(r))
                reduct.push_back(&r);
        std::vector<char> forbidden(c_.literals.size(), 0);
        for (int g : guess_)
            forbidden[g] = value_[g] == 0;
        for (auto& m : MinimalModels(c_, std::move(reduct), forbidden).run()) {
            const bool stable = std::all_of(guess_.begin(), guess_.end(), [&](int g) {
                return value_[g] == 0 || std::binary_search(m.begin(), m.end(), g);
            });
            if (stable)
                results_.push_back(std::move(m));
        }
    }

    const Compiled& c_;
    std::vector<int> guess_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<int>> results_;
};

} // namespace

AnswerSetResult answer_sets(const Program& p, const Limits& limits)
{
    const Compiled c(p);
    if (contradictory_is_answer_set(c))
        return make_result({Interpretation::contradictory()});
    std::vector<Interpretation> sets;
    for (const auto& m : GuessSearch(c, limits).run())
        sets.push_back(c.to_interpretation(m));
    return make_result(std::move(sets));
}

AnswerSetResult answer_sets_reference(const Program& p, std::size_t max_literals)
{
    const Compiled c(p);
    std::vector<int> heads;
    for (std::size_t i = 0; i < c.literals.size(); ++i)
        if (c.in_head[i])
            heads.push_back(static_cast<int>(i));
    if (heads.size() > max_literals)
        throw Error(ErrorCode::CandidateBudgetExceeded,
                    "reference enumeration limited to " + std::to_string(max_literals) + " literals");

    const std::uint32_t full = (std::uint32_t{1} << heads.size()) - 1;
    auto member = [&](std::uint32_t mask, int lit) {
        for (std::size_t i = 0; i < heads.size(); ++i)
            if (heads[i] == lit)
                return ((mask >> i) & 1U) != 0;
        return false;
    };
    auto consistent_mask = [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < heads.size(); ++i)
            if (((mask >> i) & 1U) && c.complement[heads[i]] >= 0 && member(mask, c.complement[heads[i]]))
                return false;
        return true;
    };
    // Is `t` a model of the reduct of the program with respect to `s`?
    auto model_of_reduct = [&](std::uint32_t t, std::uint32_t s, bool naf_free_only) {
        for (const auto& r : c.rules) {
            if (naf_free_only ? !r.neg.empty()
                              : std::any_of(r.neg.begin(), r.neg.end(), [&](int l) { return member(s, l); }))
                continue;
            if (!std::all_of(r.pos.begin(), r.pos.end(), [&](int l) { return member(t, l); }))
                continue;
            if (!std::any_of(r.head.begin(), r.head.end(), [&](int l) { return member(t, l); }))
                return false;
        }
        return true;
    };

    std::vector<Interpretation> sets;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!consistent_mask(s) || !model_of_reduct(s, s, false))
            continue;
        bool minimal = true;
        for (std::uint32_t t = (s - 1) & s; minimal && t != s; t = (t - 1) & s) {
            if (model_of_reduct(t, s, false))
                minimal = false;
            if (t == 0)
                break;
        }
        if (!minimal)
            continue;
        std::vector<int> ids;
        for (std::size_t i = 0; i < heads.size(); ++i)
            if ((s >> i) & 1U)
                ids.push_back(heads[i]);
        sets.push_back(c.to_interpretation(ids));
    }

    bool naf_free_constraint = std::any_of(c.rules.begin(), c.rules.end(), [](const CompiledRule& r) {
        return r.neg.empty() && r.head.empty();
    });
    if (!naf_free_constraint) {
        bool has_consistent_model = false;
        for (std::uint32_t t = 0; t <= full && !has_consistent_model; ++t)
            has_consistent_model = consistent_mask(t) && model_of_reduct(t, 0, true);
        if (!has_consistent_model)
            sets.push_back(Interpretation::contradictory());
    }
    return make_result(std::move(sets));
}

// ---------------------------------------------------------------------------
// Consistency and entailment
// ---------------------------------------------------------------------------

namespace {

AnswerSetResult ground_and_solve(const Program& p, const Limits& limits, const Universe& extra)
{
    auto u = constants(p);
    u.insert(extra.begin(), extra.end());
    return answer_sets(ground(p, u, limits), limits);
}

} // namespace

bool consistent(const Program& p, const Limits& limits, const Universe& extra)
{
    return ground_and_solve(p, limits, extra).consistent();
}

bool entails(const Program& p, const Literal& l, const Limits& limits, const Universe& extra)
{
    const auto result = ground_and_solve(p, limits, extra);
    return std::all_of(result.sets.begin(), result.sets.end(),
                       [&](const Interpretation& s) { return s.contains(l); });
}

bool credulous_holds(const Program& p, const Literal& l, const Limits& limits, const Universe& extra)
{
    const auto result = ground_and_solve(p, limits, extra);
    return std::any_of(result.sets.begin(), result.sets.end(), [&](const Interpretation& s) {
        return !s.is_contradictory() && s.contains(l);
    });
}

bool is_stratified(const Program& p, bool require_nlp)
{
    std::map<Literal, int> ids;
    auto id = [&](const Literal& l) {
        return ids.emplace(l, static_cast<int>(ids.size())).first->second;
    };
    struct Edge {
        int to;
        bool negative;
    };
    std::vector<std::pair<int, Edge>> edges;
    for (const auto& r : p) {
        require_ground(r);
        if (require_nlp) {
            if (r.head().size() > 1)
                throw Error(ErrorCode::NotNLP, "disjunctive rule: " + to_string(r));
            auto has_strong_neg = [](const Literal& l) { return l.negated; };
            const auto pos = r.positive_body();
            const auto neg = r.negative_body();
            if (std::any_of(r.head().begin(), r.head().end(), has_strong_neg) ||
                std::any_of(pos.begin(), pos.end(), has_strong_neg) ||
                std::any_of(neg.begin(), neg.end(), has_strong_neg))
                throw Error(ErrorCode::NotNLP, "strong negation in: " + to_string(r));
        }
        for (const auto& h : r.head()) {
            const int from = id(h);
            for (const auto& l : r.positive_body())
                edges.push_back({from, Edge{id(l), false}});
            for (const auto& l : r.negative_body())
                edges.push_back({from, Edge{id(l), true}});
        }
    }

    // Tarjan's SCC, then look for a negative edge inside a component.
    const int n = static_cast<int>(ids.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [from, e] : edges)
        adj[from].push_back(e.to);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, components = 0;
    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                const int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = components;
                if (w == v)
                    break;
            }
            ++components;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0)
            visit(v);
    return std::none_of(edges.begin(), edges.end(), [&](const auto& fe) {
        return fe.second.negative && comp[fe.first] == comp[fe.second.to];
    });
}

} // namespace abdukit
