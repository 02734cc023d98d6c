#include "rcv/profile.hpp"

#include "rcv/errors.hpp"

namespace rcv {

PreferenceProfile::PreferenceProfile(std::set<CandidateId> roster,
                                     std::map<Ballot, long long> tallies)
    : roster_(std::move(roster)) {
    for (auto &[ballot, count] : tallies) {
        if (count < 0)
            throw Error("negative ballot count");
        if (count == 0)
            continue;
        for (const auto &c : ballot.ranking()) {
            if (!roster_.contains(c))
                throw RosterError("ballot ranks unknown candidate '" + c + "'");
        }
        tallies_.emplace(ballot, count);
        total_voters_ += count;
    }
}

PreferenceProfile PreferenceProfile::aggregate(std::set<CandidateId> roster,
                                               const std::vector<Ballot> &ballots) {
    std::map<Ballot, long long> tallies;
    for (const auto &b : ballots)
        tallies[b] += 1;
    return PreferenceProfile(std::move(roster), std::move(tallies));
}

long long PreferenceProfile::count_of(const Ballot &b) const {
    auto it = tallies_.find(b);
    return it == tallies_.end() ? 0 : it->second;
}

PreferenceProfile PreferenceProfile::collapse_full_rankings() const {
    const std::size_t n = roster_.size();
    std::map<Ballot, long long> out;
    for (const auto &[ballot, count] : tallies_) {
        // Only nonempty rankings of exactly n-1 candidates force a unique
        // completion; everything else (including empty rankings) is kept.
        if (!ballot.empty() && ballot.size() + 1 == n) {
            std::vector<CandidateId> full = ballot.ranking();
            for (const auto &c : roster_) {
                if (!ballot.ranks(c)) {
                    full.push_back(c);
                    break;
                }
            }
            out[Ballot(std::move(full))] += count;
        } else {
            out[ballot] += count;
        }
    }
    return PreferenceProfile(roster_, std::move(out));
}

PreferenceProfile PreferenceProfile::remove_candidate(const CandidateId &c) const {
    if (!roster_.contains(c))
        throw RosterError("cannot remove unknown candidate '" + c + "'");
    std::set<CandidateId> roster = roster_;
    roster.erase(c);
    std::map<Ballot, long long> out;
    for (const auto &[ballot, count] : tallies_)
        out[ballot.without(c)] += count;
    return PreferenceProfile(std::move(roster), std::move(out));
}

PreferenceProfile PreferenceProfile::with_shift(const Ballot &from, const Ballot &to,
                                                long long k) const {
    if (k < 1)
        throw Error("shift count must be at least 1");
    if (count_of(from) < k)
        throw Error("profile holds fewer than k ballots of the source type");
    std::map<Ballot, long long> out = tallies_;
    out[from] -= k;
    out[to] += k;
    return PreferenceProfile(roster_, std::move(out));
}

PreferenceProfile PreferenceProfile::with_removal(const Ballot &ranking, long long k) const {
    if (k < 1)
        throw Error("removal count must be at least 1");
    if (count_of(ranking) < k)
        throw Error("profile holds fewer than k ballots of the given type");
    std::map<Ballot, long long> out = tallies_;
    out[ranking] -= k;
    return PreferenceProfile(roster_, std::move(out));
}

} // namespace rcv
