#ifndef RCV_PROFILE_HPP
#define RCV_PROFILE_HPP

#include <map>
#include <set>
#include <vector>

#include "rcv/ballot.hpp"

namespace rcv {

// A preference profile: candidate roster plus a tally of voters per distinct
// ballot ranking. Immutable after construction; every operation returns a
// new profile, so profiles are safe to share across threads.
//
// Zero-count entries are never stored; the empty ranking may carry a count
// (voters whose ballot lost all its candidates). Such voters contribute to
// total_voters() but never to any round tally.
class PreferenceProfile {
public:
    PreferenceProfile() = default;
    PreferenceProfile(std::set<CandidateId> roster, std::map<Ballot, long long> tallies);

    // Count occurrences of each ballot. Throws RosterError if a ballot
    // ranks a candidate outside the roster.
    static PreferenceProfile aggregate(std::set<CandidateId> roster,
                                       const std::vector<Ballot> &ballots);

    const std::set<CandidateId> &roster() const { return roster_; }
    const std::map<Ballot, long long> &tallies() const { return tallies_; }

    long long total_voters() const { return total_voters_; }
    long long count_of(const Ballot &b) const;

    // Merge each ballot ranking all-but-one candidate into the full ranking
    // it implies (append the missing candidate). Idempotent; leaves the
    // winner and every pre-terminal round tally unchanged.
    PreferenceProfile collapse_full_rankings() const;

    // Delete c from the roster and from every ranking. Ballots that become
    // empty are kept with their counts as empty rankings.
    PreferenceProfile remove_candidate(const CandidateId &c) const;

    // Move k voters from ballot type `from` to type `to`. Throws if fewer
    // than k voters hold `from` or if `to` leaves the roster.
    PreferenceProfile with_shift(const Ballot &from, const Ballot &to, long long k) const;

    // Remove k voters holding `ranking` from the profile entirely.
    PreferenceProfile with_removal(const Ballot &ranking, long long k) const;

    bool operator==(const PreferenceProfile &) const = default;

private:
    std::set<CandidateId> roster_;
    std::map<Ballot, long long> tallies_;
    long long total_voters_ = 0;
};

} // namespace rcv

#endif
