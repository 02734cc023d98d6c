#ifndef RCV_PATHOLOGY_HPP
#define RCV_PATHOLOGY_HPP

#include <optional>
#include <variant>
#include <vector>

#include "rcv/irv.hpp"
#include "rcv/profile.hpp"

namespace rcv {

enum class WitnessKind { spoiler, upward_monotonicity, no_show };

struct CandidateDeletion {
    CandidateId candidate;
    bool operator==(const CandidateDeletion &) const = default;
};
struct BallotShift {
    Ballot from;
    Ballot to;
    long long k = 0;
    bool operator==(const BallotShift &) const = default;
};
struct BallotRemoval {
    Ballot ranking;
    long long k = 0;
    bool operator==(const BallotRemoval &) const = default;
};
using Modification = std::variant<CandidateDeletion, BallotShift, BallotRemoval>;

// A concrete, replayable ballot modification demonstrating a pathology.
// Applying `modification` to the profile it was found on and re-tabulating
// yields new_winner; the unmodified profile yields original_winner.
struct ParadoxWitness {
    WitnessKind kind = WitnessKind::spoiler;
    Modification modification;
    CandidateId original_winner;
    CandidateId new_winner;
    RoundLog before;
    RoundLog after;
    // For monotonicity witnesses: the shift ranks the winner on ballots
    // that previously did not rank her at all.
    bool adds_new_ranking = false;
    bool operator==(const ParadoxWitness &) const = default;
};

// Apply a witness modification, producing the modified profile. Throws on a
// structurally inapplicable modification (unknown candidate, k too large).
PreferenceProfile apply_modification(const PreferenceProfile &profile, const Modification &mod);

// Structural validity of a support-gaining shift: `to` ranks w, the non-w
// candidates keep their exact relative order and ranked/unranked status, no
// pairwise relation involving w degrades, and at least one strictly improves.
bool support_strictly_improves(const Ballot &from, const Ballot &to, const CandidateId &w,
                               const std::set<CandidateId> &roster);

// For each losing candidate, re-tabulate with that candidate removed and
// report the ones whose removal changes the winner. Sorted by candidate id.
// Replays that hit an elimination tie are rejected.
std::vector<ParadoxWitness> find_spoilers(const PreferenceProfile &profile,
                                          TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

// Search every single-type shift family (t -> t', k) where t' strictly
// raises the winner on ballots of type t, for the smallest k whose replay
// dethrones the winner without hitting any elimination tie. Families are
// evaluated in parallel; the result is the witness with the smallest k,
// ties between families broken by lexicographic (from, to) order.
// Expects a profile already reduced by collapse_full_rankings().
std::optional<ParadoxWitness>
find_upward_monotonicity_witness(const PreferenceProfile &profile,
                                 TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

// Search every ballot type whose voters rank somebody above the winner for
// the smallest k such that withholding k of those ballots elects a candidate
// they rank above the winner, without any elimination tie in the replay.
std::optional<ParadoxWitness>
find_no_show_witness(const PreferenceProfile &profile,
                     TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

// Independent replay oracle: re-tabulates both sides from scratch and checks
// the witness's winners, kind-specific validity, and tie-free replays.
// Never throws; an invalid or inapplicable witness yields false.
bool verify_witness(const PreferenceProfile &profile, const ParadoxWitness &witness,
                    TiePolicy tie_policy = TiePolicy::lexicographic_by_id);

} // namespace rcv

#endif
