#ifndef RCV_IRV_HPP
#define RCV_IRV_HPP

#include <map>
#include <optional>
#include <set>

#include "rcv/profile.hpp"

namespace rcv {

enum class TiePolicy {
    lexicographic_by_id, // eliminate the tied candidate with the smallest id
    error_on_tie,        // throw TieError naming the tied candidates
};

// Where the ballots of one eliminated candidate went.
struct Transfer {
    std::map<CandidateId, long long> to;
    long long exhausted = 0;
    bool operator==(const Transfer &) const = default;
};

struct Round {
    // Start-of-round tallies over continuing candidates. Together with
    // exhausted_total they account for every voter in the profile.
    std::map<CandidateId, long long> tallies;
    long long exhausted_total = 0; // cumulative, as of the start of the round
    std::optional<CandidateId> eliminated;
    std::optional<Transfer> transfer;
    bool tie = false; // elimination chose among more than one minimal candidate
    bool operator==(const Round &) const = default;
};

struct RoundLog {
    std::vector<Round> rounds;
    CandidateId winner;
    bool any_tie() const;
    bool operator==(const RoundLog &) const = default;
};

// Tally of first preferences; every roster candidate appears, 0 if unsupported.
std::map<CandidateId, long long> first_place_tallies(const PreferenceProfile &profile);

// One transfer step. `tallies` are the current continuing tallies (keyed by
// the candidates still standing plus those being eliminated now); `eliminated`
// names the candidates to eliminate in this step. Candidates absent from
// `tallies` are taken as eliminated in earlier rounds.
struct RoundStep {
    std::map<CandidateId, Transfer> transfers; // keyed by newly eliminated candidate
    std::map<CandidateId, long long> tallies;  // continuing candidates after the step
    long long newly_exhausted = 0;
};
RoundStep round_step(const std::map<CandidateId, long long> &tallies,
                     const PreferenceProfile &profile,
                     const std::set<CandidateId> &eliminated);

// Full instant-runoff tabulation. Each round tallies continuing first
// preferences; a candidate with a strict majority of the continuing
// (non-exhausted) votes wins; otherwise the minimal-tally candidate is
// eliminated (one per round, ties per policy) and its ballots transfer.
// Throws NoVotesError when no ballot ranks anyone.
RoundLog tabulate(const PreferenceProfile &profile,
                  TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

} // namespace rcv

#endif
