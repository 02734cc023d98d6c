#include "rcv/irv.hpp"

#include <algorithm>
#include <numeric>

#include "rcv/errors.hpp"

namespace rcv {

bool RoundLog::any_tie() const {
    return std::any_of(rounds.begin(), rounds.end(), [](const Round &r) { return r.tie; });
}

std::map<CandidateId, long long> first_place_tallies(const PreferenceProfile &profile) {
    std::map<CandidateId, long long> tallies;
    for (const auto &c : profile.roster())
        tallies[c] = 0;
    for (const auto &[ballot, count] : profile.tallies()) {
        if (!ballot.empty())
            tallies[ballot.ranking().front()] += count;
    }
    return tallies;
}

RoundStep round_step(const std::map<CandidateId, long long> &tallies,
                     const PreferenceProfile &profile,
                     const std::set<CandidateId> &eliminated) {
    for (const auto &c : eliminated) {
        if (!profile.roster().contains(c))
            throw RosterError("eliminated candidate '" + c + "' is not in the roster");
    }

    // Candidates missing from the tally map were eliminated in prior rounds.
    std::set<CandidateId> prior;
    for (const auto &c : profile.roster()) {
        if (!tallies.contains(c))
            prior.insert(c);
    }
    std::set<CandidateId> all_gone = prior;
    all_gone.insert(eliminated.begin(), eliminated.end());

    RoundStep step;
    for (const auto &[c, t] : tallies) {
        if (!eliminated.contains(c))
            step.tallies[c] = t;
    }
    for (const auto &[ballot, count] : profile.tallies()) {
        auto holder = ballot.top_choice(prior);
        if (!holder || !eliminated.contains(*holder))
            continue; // ballot is not held by a newly eliminated candidate
        Transfer &tr = step.transfers[*holder];
        if (auto next = ballot.top_choice(all_gone)) {
            tr.to[*next] += count;
            step.tallies[*next] += count;
        } else {
            tr.exhausted += count;
            step.newly_exhausted += count;
        }
    }
    // An eliminated candidate with no ballots still gets an (empty) entry.
    for (const auto &c : eliminated) {
        if (tallies.contains(c))
            step.transfers.try_emplace(c);
    }
    return step;
}

RoundLog tabulate(const PreferenceProfile &profile, TiePolicy tie_policy) {
    std::map<CandidateId, long long> tallies = first_place_tallies(profile);
    long long continuing_votes =
        std::accumulate(tallies.begin(), tallies.end(), 0LL,
                        [](long long acc, const auto &kv) { return acc + kv.second; });
    if (continuing_votes == 0)
        throw NoVotesError("no ballot ranks any candidate");

    long long exhausted = profile.total_voters() - continuing_votes; // empty rankings

    RoundLog log;
    while (true) {
        auto best = std::max_element(
            tallies.begin(), tallies.end(),
            [](const auto &a, const auto &b) { return a.second < b.second; });
        if (2 * best->second > continuing_votes) {
            log.rounds.push_back(Round{tallies, exhausted, std::nullopt, std::nullopt, false});
            log.winner = best->first;
            return log;
        }

        long long min_tally = std::min_element(tallies.begin(), tallies.end(),
                                               [](const auto &a, const auto &b) {
                                                   return a.second < b.second;
                                               })
                                  ->second;
        std::vector<CandidateId> tied;
        for (const auto &[c, t] : tallies) {
            if (t == min_tally)
                tied.push_back(c);
        }
        if (tied.size() > 1 && tie_policy == TiePolicy::error_on_tie) {
            std::string msg = "elimination tie between:";
            for (const auto &c : tied)
                msg += " '" + c + "'";
            throw TieError(msg, tied);
        }
        const CandidateId elim = tied.front(); // map iteration is id-ordered

        RoundStep step = round_step(tallies, profile, {elim});
        log.rounds.push_back(
            Round{tallies, exhausted, elim, step.transfers.at(elim), tied.size() > 1});
        tallies = std::move(step.tallies);
        exhausted += step.newly_exhausted;
        continuing_votes -= step.newly_exhausted;
        if (tallies.empty())
            throw Error("internal: eliminated every candidate without finding a winner");
    }
}

} // namespace rcv
